use std::collections::BTreeMap;
use std::fmt;

/// One verdict of one check on one (representation, formula) pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub check: &'static str,
    pub rep: String,
    pub formula: Option<usize>,
    pub seed: Option<u64>,
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Point index in the relevant hom-space, when there is one.
    pub witness: Option<usize>,
    pub detail: String,
}

impl Record {
    pub fn pass(check: &'static str, rep: impl Into<String>) -> Self {
        Record {
            check,
            rep: rep.into(),
            formula: None,
            seed: None,
            failure: None,
        }
    }

    pub fn fail(check: &'static str, rep: impl Into<String>, witness: Option<usize>, detail: impl Into<String>) -> Self {
        Record {
            failure: Some(Failure {
                witness,
                detail: detail.into(),
            }),
            ..Record::pass(check, rep)
        }
    }

    pub fn formula(mut self, index: usize) -> Self {
        self.formula = Some(index);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} rep={}", self.check, self.rep)?;
        if let Some(i) = self.formula {
            write!(f, " formula={i}")?;
        }
        if let Some(s) = self.seed {
            write!(f, " seed={s:#018x}")?;
        }
        if let Some(fail) = &self.failure {
            if let Some(w) = fail.witness {
                write!(f, " witness={w}")?;
            }
            write!(f, " detail={:?}", fail.detail)?;
        }
        Ok(())
    }
}

/// Line-oriented report: one record per line, then a summary block with
/// counts per check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }

    pub fn all_passed(&self) -> bool {
        self.failure_count() == 0
    }

    /// `(pass, fail)` per check name, sorted by name.
    pub fn counts(&self) -> BTreeMap<&'static str, (usize, usize)> {
        let mut out: BTreeMap<&'static str, (usize, usize)> = BTreeMap::new();
        for r in &self.records {
            let e = out.entry(r.check).or_default();
            if r.passed() {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        writeln!(f, "# summary")?;
        for (check, (pass, fail)) in self.counts() {
            writeln!(f, "check {check} pass={pass} fail={fail}")?;
        }
        let fail = self.failure_count();
        writeln!(
            f,
            "total {} checks pass={} fail={fail}",
            self.records.len(),
            self.records.len() - fail
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let mut r = Report::new();
        r.push(Record::pass("saturation", "R2").formula(3).seed(5));
        r.push(Record::fail("heredity", "R2", Some(4), "H={0}").formula(1));
        let text = r.to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "PASS saturation rep=R2 formula=3 seed=0x0000000000000005");
        assert_eq!(lines[1], "FAIL heredity rep=R2 formula=1 witness=4 detail=\"H={0}\"");
        assert_eq!(lines[2], "# summary");
        assert_eq!(lines[3], "check heredity pass=0 fail=1");
        assert_eq!(lines.last().unwrap(), &"total 2 checks pass=1 fail=1");
    }

    #[test]
    fn empty_report() {
        assert_eq!(Report::new().to_string(), "# summary\ntotal 0 checks pass=0 fail=0\n");
    }
}
