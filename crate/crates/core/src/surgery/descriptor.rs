use std::fmt;

use serde::{Deserialize, Serialize};

use super::SL2Z;

/// Number of embedded tori, hence of surgeries.
pub const NUM_SURGERIES: usize = 4;

/// One surgery: coefficient `k` and the twist `τ` precomposed with the
/// embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct Surgery {
    pub k: i64,
    pub tau: SL2Z,
}

impl Surgery {
    pub fn new(k: i64, tau: SL2Z) -> Self {
        Surgery { k, tau }
    }

    pub fn untwisted(k: i64) -> Self {
        Surgery {
            k,
            tau: SL2Z::identity(),
        }
    }
}

/// Surgery data along each of the four embedded tori, in catalog order.
/// Ordered lexicographically slot by slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct SurgeryDescriptor {
    pub surgeries: [Surgery; NUM_SURGERIES],
}

impl SurgeryDescriptor {
    pub fn new(surgeries: [Surgery; NUM_SURGERIES]) -> Self {
        SurgeryDescriptor { surgeries }
    }

    /// All twists trivial.
    pub fn untwisted(k: [i64; NUM_SURGERIES]) -> Self {
        SurgeryDescriptor {
            surgeries: k.map(Surgery::untwisted),
        }
    }

    pub fn ks(&self) -> [i64; NUM_SURGERIES] {
        self.surgeries.map(|s| s.k)
    }

    pub fn taus(&self) -> [SL2Z; NUM_SURGERIES] {
        self.surgeries.map(|s| s.tau)
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }
}

impl fmt::Display for SurgeryDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.ks().iter().map(|k| k.to_string()).collect();
        write!(f, "k = ({})", ks.join(", "))?;
        let twisted: Vec<String> = self
            .surgeries
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.tau.is_identity())
            .map(|(i, s)| format!("tau{} = {}", i + 1, s.tau))
            .collect();
        if !twisted.is_empty() {
            write!(f, "; {}", twisted.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let d = SurgeryDescriptor::new([
            Surgery::new(2, SL2Z::new(1, 1, 0, 1).unwrap()),
            Surgery::untwisted(-3),
            Surgery::untwisted(0),
            Surgery::untwisted(1),
        ]);
        let text = d.to_json();
        assert_eq!(
            text,
            r#"{"surgeries":[{"k":2,"tau":[[1,1],[0,1]]},{"k":-3,"tau":[[1,0],[0,1]]},{"k":0,"tau":[[1,0],[0,1]]},{"k":1,"tau":[[1,0],[0,1]]}]}"#
        );
        assert_eq!(SurgeryDescriptor::from_json(&text).unwrap(), d);
        assert_eq!(SurgeryDescriptor::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn malformed_json_rejected() {
        let three = r#"{"surgeries":[{"k":1,"tau":[[1,0],[0,1]]},{"k":1,"tau":[[1,0],[0,1]]},{"k":1,"tau":[[1,0],[0,1]]}]}"#;
        assert!(SurgeryDescriptor::from_json(three).is_err());
        let bad_det = r#"{"surgeries":[{"k":1,"tau":[[2,0],[0,1]]},{"k":1,"tau":[[1,0],[0,1]]},{"k":1,"tau":[[1,0],[0,1]]},{"k":1,"tau":[[1,0],[0,1]]}]}"#;
        let err = SurgeryDescriptor::from_json(bad_det).unwrap_err().to_string();
        assert!(err.contains("determinant 2"), "{}", err);
    }
}
