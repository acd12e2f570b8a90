//! Named parameter descriptors covering every classified case and branch.
//!
//! Presets are built on a caller-supplied label group so their characters can
//! interoperate with characters the caller constructs.  Characters of order
//! greater than two are synthesized as ν-power twists of the standard
//! quadratic generators.

use super::*;
use crate::characters::LabelGroup;

const NAMES: &[&str] = &[
    "sp4-1",
    "sp4-2",
    "sp4-3",
    "sp4-4a",
    "sp4-4b",
    "sp4-4c",
    "sp4-5a",
    "sp4-5b",
    "sp4-5b-regular",
    "sp4-5b-regular-deep",
    "sp4-5c",
    "sp4-5d",
    "sp4-6a",
    "sp4-6a-shifted",
    "sp4-6b",
    "sp4-6c",
    "sp4-6d",
    "sp4-7a-trivial",
    "sp4-7a-steinberg",
    "sp4-7a-22",
    "sp4-7a-211",
    "sp4-7b",
    "sp4-7b-first",
    "sp4-7b-diagonal-eta",
    "sp4-7b-diagonal-eta2",
    "sp4-7b-diagonal-eta2p",
    "sp4-7c",
    "sp4-7c-shifted",
    "sp4-7d",
    "sp4-7d-shifted",
    "sp4-7e",
    "sp4-7f",
    "sp4-7f-generic",
    "sp4-7f-steinberg",
    "sp4-7f-limit",
    "sp4-7f-ram-limit",
    "sp4-7j",
    "gsp4-1",
    "gsp4-2a",
    "gsp4-2b",
    "gsp4-2b-temp",
    "gsp4-2b-shifted",
    "gsp4-2c",
    "gsp4-3a",
    "gsp4-3a-regular",
    "gsp4-3a-regular-deep",
    "gsp4-3b",
    "gsp4-3b-limit",
    "gsp4-4a-trivial",
    "gsp4-4a-steinberg",
    "gsp4-4a-22",
    "gsp4-4a-211",
    "gsp4-4b-trivial",
    "gsp4-4b-first",
    "gsp4-4b-second",
    "gsp4-4b-regular-eta",
    "gsp4-4b-regular-eta2",
    "gsp4-4b-regular-mixed",
    "gsp4-4c",
    "gsp4-4c-generic",
    "gsp4-4c-limit1",
    "gsp4-4c-limit2",
    "gsp4-4d",
    "gsp4-4d-half",
    "gsp4-4d-nu",
    "gsp4-4e",
    "gsp4-4e-klingen",
    "gsp4-4e-steinberg",
];

/// Names of all built-in descriptors.
pub fn preset_names() -> Vec<&'static str> {
    NAMES.to_vec()
}

/// Build a named descriptor over the given label group.
pub fn preset(name: &str, lg: &LabelGroup) -> Result<ParamDescriptor> {
    use SelfDuality::None as None_;
    use SelfDuality::{Orthogonal, Symplectic};
    let one = lg.one();
    let eta = lg.eta();
    let eta2 = lg.eta2();
    let eta2p = lg.eta2p();
    // A convenient character of infinite order with ramified unit part.
    let gen = eta2.times_nu_frac(1, 4);
    let triv = Sl2Data::trivial;
    let p = match name {
        "sp4-1" => ParamDescriptor::sp4(vec![Summand::irr("V5", 5, Orthogonal, &one)], triv()),
        "sp4-2" => ParamDescriptor::sp4(
            vec![Summand::irr("V4", 4, Orthogonal, &eta2), Summand::character(&eta2)],
            triv(),
        ),
        "sp4-3" => ParamDescriptor::sp4(
            vec![
                Summand::irr("V3", 3, Orthogonal, &eta2),
                Summand::irr("V2", 2, Orthogonal, &eta2),
            ],
            triv(),
        ),
        "sp4-4a" => ParamDescriptor::sp4(
            vec![Summand::irr("V3", 3, Orthogonal, &one), Summand::character_mult(&eta2, 2)],
            triv(),
        ),
        "sp4-4b" => ParamDescriptor::sp4(
            vec![
                Summand::irr("V3", 3, Orthogonal, &eta2.mul(&eta2p)?),
                Summand::character(&eta2),
                Summand::character(&eta2p),
            ],
            triv(),
        ),
        "sp4-4c" => ParamDescriptor::sp4(
            vec![
                Summand::irr("V3", 3, Orthogonal, &one),
                Summand::character(&gen),
                Summand::character(&gen.inv()),
            ],
            triv(),
        ),
        "sp4-5a" => ParamDescriptor::sp4(
            vec![Summand::irr("V2", 2, Orthogonal, &eta2).with_mult(2), Summand::character(&one)],
            triv(),
        ),
        "sp4-5b" | "sp4-5b-regular" | "sp4-5b-regular-deep" => {
            let mut v = Summand::irr("V2", 2, Symplectic, &one).with_mult(2);
            if name.ends_with("deep") {
                v = v.positive_depth();
            }
            let sl2 = if name == "sp4-5b" { triv() } else { Sl2Data::partition(&[2]) };
            ParamDescriptor::sp4(vec![v, Summand::character(&one)], sl2)
        }
        "sp4-5c" => ParamDescriptor::sp4(
            vec![
                Summand::irr("V2", 2, Orthogonal, &eta2),
                Summand::irr("V2'", 2, Orthogonal, &eta2p),
                Summand::character(&eta2.mul(&eta2p)?),
            ],
            triv(),
        ),
        "sp4-5d" => ParamDescriptor::sp4(
            vec![
                Summand::irr("V2", 2, None_, &eta2),
                Summand::irr("V2^vee", 2, None_, &eta2),
                Summand::character(&one),
            ],
            triv(),
        )
        .with_dual_pair(),
        "sp4-6a" | "sp4-6a-shifted" => ParamDescriptor::sp4(
            vec![Summand::irr("V2", 2, Orthogonal, &eta2), Summand::character_mult(&eta2, 3)],
            if name == "sp4-6a" { triv() } else { Sl2Data::partition(&[3]) },
        ),
        "sp4-6b" => ParamDescriptor::sp4(
            vec![
                Summand::irr("V2", 2, Orthogonal, &eta2),
                Summand::character_mult(&eta, 2),
                Summand::character(&eta2),
            ],
            triv(),
        ),
        "sp4-6c" => ParamDescriptor::sp4(
            vec![
                Summand::irr("V2", 2, Orthogonal, &eta.mul(&eta2)?.mul(&eta2p)?),
                Summand::character(&eta),
                Summand::character(&eta2),
                Summand::character(&eta2p),
            ],
            triv(),
        ),
        "sp4-6d" => {
            let b = eta.times_nu_frac(1, 4);
            ParamDescriptor::sp4(
                vec![
                    Summand::irr("V2", 2, Orthogonal, &eta2),
                    Summand::character(&eta2),
                    Summand::character(&b),
                    Summand::character(&b.inv()),
                ],
                triv(),
            )
        }
        "sp4-7a-trivial" => ParamDescriptor::sp4(vec![Summand::character_mult(&one, 5)], triv()),
        "sp4-7a-steinberg" => {
            ParamDescriptor::sp4(vec![Summand::character_mult(&one, 5)], Sl2Data::partition(&[4]))
        }
        "sp4-7a-22" => {
            ParamDescriptor::sp4(vec![Summand::character_mult(&one, 5)], Sl2Data::partition(&[2, 2]))
        }
        "sp4-7a-211" => ParamDescriptor::sp4(
            vec![Summand::character_mult(&one, 5)],
            Sl2Data::partition(&[2, 1, 1]),
        ),
        "sp4-7b" | "sp4-7b-first" | "sp4-7b-diagonal-eta2" => {
            let sl2 = match name {
                "sp4-7b" => triv(),
                "sp4-7b-first" => Sl2Data::embedded(&[2], Sl2Embedding::FirstFactor),
                _ => Sl2Data::embedded(&[2], Sl2Embedding::Diagonal),
            };
            ParamDescriptor::sp4(
                vec![Summand::character_mult(&eta2, 4), Summand::character(&one)],
                sl2,
            )
        }
        "sp4-7b-diagonal-eta" => ParamDescriptor::sp4(
            vec![Summand::character_mult(&eta, 4), Summand::character(&one)],
            Sl2Data::embedded(&[2], Sl2Embedding::Diagonal),
        ),
        "sp4-7b-diagonal-eta2p" => ParamDescriptor::sp4(
            vec![Summand::character_mult(&eta2p, 4), Summand::character(&one)],
            Sl2Data::embedded(&[2], Sl2Embedding::Diagonal),
        ),
        "sp4-7c" | "sp4-7c-shifted" => ParamDescriptor::sp4(
            vec![Summand::character_mult(&eta2, 2), Summand::character_mult(&one, 3)],
            if name == "sp4-7c" { triv() } else { Sl2Data::partition(&[2]) },
        ),
        "sp4-7d" | "sp4-7d-shifted" => ParamDescriptor::sp4(
            vec![
                Summand::character(&gen),
                Summand::character(&gen.inv()),
                Summand::character_mult(&one, 3),
            ],
            if name == "sp4-7d" { triv() } else { Sl2Data::partition(&[2]) },
        ),
        "sp4-7e" => ParamDescriptor::sp4(
            vec![
                Summand::character_mult(&eta, 2),
                Summand::character_mult(&eta2, 2),
                Summand::character(&one),
            ],
            triv(),
        ),
        "sp4-7f" | "sp4-7f-generic" | "sp4-7f-steinberg" | "sp4-7f-limit"
        | "sp4-7f-ram-limit" => {
            let c = match name {
                "sp4-7f-steinberg" => lg.nu_frac(3, 2),
                "sp4-7f-limit" => lg.nu_frac(1, 2),
                "sp4-7f-ram-limit" => eta2.times_nu_frac(1, 2),
                _ => gen.clone(),
            };
            let sl2 = if name == "sp4-7f" { triv() } else { Sl2Data::partition(&[2]) };
            ParamDescriptor::sp4(
                vec![
                    Summand::character_mult(&c, 2),
                    Summand::character_mult(&c.inv(), 2),
                    Summand::character(&one),
                ],
                sl2,
            )
        }
        "sp4-7j" => {
            let b = eta.times_nu_frac(1, 3);
            ParamDescriptor::sp4(
                vec![
                    Summand::character(&one),
                    Summand::character(&gen),
                    Summand::character(&gen.inv()),
                    Summand::character(&b),
                    Summand::character(&b.inv()),
                ],
                triv(),
            )
        }
        "gsp4-1" => {
            ParamDescriptor::gsp4(vec![Summand::irr("V4", 4, Symplectic, &one)], &eta2, triv())
        }
        "gsp4-2a" => ParamDescriptor::gsp4(
            vec![Summand::irr("V2", 2, Symplectic, &eta2).with_mult(2)],
            &eta2,
            triv(),
        ),
        "gsp4-2b" | "gsp4-2b-temp" | "gsp4-2b-shifted" => {
            let xi = if name == "gsp4-2b-temp" {
                eta2.times_nu_frac(1, 1)
            } else {
                gen.clone()
            };
            let sl2 = if name == "gsp4-2b-shifted" { Sl2Data::partition(&[2]) } else { triv() };
            ParamDescriptor::gsp4(
                vec![Summand::irr("V2", 2, Orthogonal, &xi).with_mult(2)],
                &xi,
                sl2,
            )
        }
        "gsp4-2c" => ParamDescriptor::gsp4(
            vec![Summand::irr("V2", 2, None_, &eta2), Summand::irr("V2'", 2, None_, &eta2)],
            &eta2,
            triv(),
        )
        .with_dual_pair(),
        "gsp4-3a" | "gsp4-3a-regular" | "gsp4-3a-regular-deep" => {
            let mut v = Summand::irr("V2", 2, None_, &one);
            if name.ends_with("deep") {
                v = v.positive_depth();
            }
            let sl2 = if name == "gsp4-3a" { triv() } else { Sl2Data::partition(&[2]) };
            ParamDescriptor::gsp4(vec![v, Summand::character_mult(&eta2, 2)], &one, sl2)
        }
        "gsp4-3b" | "gsp4-3b-limit" => {
            let c = if name == "gsp4-3b" { gen.clone() } else { lg.nu_frac(1, 2) };
            ParamDescriptor::gsp4(
                vec![
                    Summand::irr("V2", 2, None_, &one),
                    Summand::character(&c),
                    Summand::character(&c.inv()),
                ],
                &one,
                triv(),
            )
        }
        "gsp4-4a-trivial" | "gsp4-4a-steinberg" | "gsp4-4a-22" | "gsp4-4a-211" => {
            let sl2 = match name {
                "gsp4-4a-steinberg" => Sl2Data::partition(&[4]),
                "gsp4-4a-22" => Sl2Data::partition(&[2, 2]),
                "gsp4-4a-211" => Sl2Data::partition(&[2, 1, 1]),
                _ => triv(),
            };
            ParamDescriptor::gsp4(vec![Summand::character_mult(&eta2, 4)], &one, sl2)
        }
        "gsp4-4b-trivial" | "gsp4-4b-first" | "gsp4-4b-second" | "gsp4-4b-regular-eta2" => {
            let sl2 = match name {
                "gsp4-4b-trivial" => triv(),
                "gsp4-4b-first" => Sl2Data::embedded(&[2], Sl2Embedding::FirstFactor),
                "gsp4-4b-second" => Sl2Data::embedded(&[2], Sl2Embedding::SecondFactor),
                _ => Sl2Data::embedded(&[2], Sl2Embedding::Diagonal),
            };
            ParamDescriptor::gsp4(
                vec![Summand::character_mult(&eta2, 2), Summand::character_mult(&one, 2)],
                &one,
                sl2,
            )
        }
        "gsp4-4b-regular-eta" => ParamDescriptor::gsp4(
            vec![Summand::character_mult(&eta, 2), Summand::character_mult(&one, 2)],
            &one,
            Sl2Data::embedded(&[2], Sl2Embedding::Diagonal),
        ),
        "gsp4-4b-regular-mixed" => ParamDescriptor::gsp4(
            vec![Summand::character_mult(&eta2, 2), Summand::character_mult(&eta2p, 2)],
            &one,
            Sl2Data::embedded(&[2], Sl2Embedding::Diagonal),
        ),
        "gsp4-4c" | "gsp4-4c-generic" | "gsp4-4c-limit1" | "gsp4-4c-limit2" => {
            let c = match name {
                "gsp4-4c-limit1" => lg.nu_frac(1, 2),
                "gsp4-4c-limit2" => lg.nu_frac(1, 1),
                _ => gen.clone(),
            };
            let sl2 = if name == "gsp4-4c" { triv() } else { Sl2Data::partition(&[2]) };
            ParamDescriptor::gsp4(
                vec![Summand::character_mult(&c, 2), Summand::character_mult(&c.inv(), 2)],
                &one,
                sl2,
            )
        }
        "gsp4-4d" | "gsp4-4d-half" | "gsp4-4d-nu" => {
            let c3 = match name {
                "gsp4-4d-half" => eta.times_nu_frac(1, 2),
                "gsp4-4d-nu" => eta2.times_nu_frac(1, 1),
                _ => eta.times_nu_frac(1, 4),
            };
            ParamDescriptor::gsp4(
                vec![
                    Summand::character_mult(&eta2, 2),
                    Summand::character(&c3),
                    Summand::character(&c3.inv()),
                ],
                &one,
                triv(),
            )
        }
        "gsp4-4e" => ParamDescriptor::gsp4(
            vec![
                Summand::character(&lg.nu_frac(1, 5)),
                Summand::character(&lg.nu_frac(1, 7)),
                Summand::character(&lg.nu_frac(-1, 7)),
                Summand::character(&lg.nu_frac(-1, 5)),
            ],
            &one,
            triv(),
        ),
        "gsp4-4e-klingen" => ParamDescriptor::gsp4(
            vec![
                Summand::character(&lg.nu_frac(3, 4)),
                Summand::character(&lg.nu_frac(-1, 4)),
                Summand::character(&lg.nu_frac(1, 4)),
                Summand::character(&lg.nu_frac(-3, 4)),
            ],
            &one,
            triv(),
        ),
        "gsp4-4e-steinberg" => ParamDescriptor::gsp4(
            vec![
                Summand::character(&lg.nu_frac(3, 2)),
                Summand::character(&lg.nu_frac(1, 2)),
                Summand::character(&lg.nu_frac(-1, 2)),
                Summand::character(&lg.nu_frac(-3, 2)),
            ],
            &one,
            triv(),
        ),
        other => {
            return Err(EngineError::InvalidOperand(format!("unknown preset {other}")));
        }
    };
    Ok(p)
}
