//! Shared inputs for the benchmarks.

use orbicover_core::groups::{GroupSpec, MixedConvention, Presentation};

/// Enumeration workloads, smallest first.
pub const GROUPS: &[&str] = &[
    "T(2,3,5)",
    "B(n=4; a=2; b=[])",
    "B(n=3; a=5; b=[inf])",
    "B2(3,3,2,2)",
    "B(n=4; a=3; b=[inf])",
];

pub fn presentation(spec: &str) -> Presentation {
    let spec: GroupSpec = spec.parse().expect("valid spec");
    spec.presentation(MixedConvention::FromOne).expect("valid presentation")
}

#[cfg(test)]
mod tests {
    #[test]
    fn workloads_parse() {
        for spec in super::GROUPS {
            super::presentation(spec);
        }
    }
}
