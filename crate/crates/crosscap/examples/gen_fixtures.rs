//! Regenerates the standard-pair fixture corpus under `fixtures/`.
//!
//! Each fixture encodes one of the published polygon constructions of a
//! standard pair: a signature, an admissible epimorphism, the deck residue,
//! and the curve as an explicit chord list. Running this binary re-verifies
//! every fixture (the curve must certify as the expected type against its
//! own deck image) before writing it out.

use crosscap::nec::{Epimorphism, NecSignature};
use crosscap::polygon::{
    assemble_fundamental_domain, deck_image, is_standard_pair, CurveDiagram, StandardPairType,
};

struct Fixture {
    name: &'static str,
    caption: &'static str,
    signature: &'static str,
    /// images in presentation order
    images: Vec<u64>,
    n: u64,
    y: u64,
    /// (copy, in-edge, in-num, in-den, out-edge, out-num, out-den)
    chords: Vec<(u64, &'static str, i64, i64, &'static str, i64, i64)>,
    expect: StandardPairType,
}

fn chords_json(chords: &[(u64, &str, i64, i64, &str, i64, i64)]) -> serde_json::Value {
    serde_json::Value::Array(
        chords
            .iter()
            .map(|&(copy, ie, inum, iden, oe, onum, oden)| {
                serde_json::json!({
                    "copy": copy,
                    "in": [ie, inum, iden],
                    "out": [oe, onum, oden],
                })
            })
            .collect(),
    )
}

fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "free_odd_prime_type1",
            caption: "free Z_3 action on N_5: arc pair through a glide in the kernel \
                      crosses its deck image once",
            signature: "(3;-;[];{})",
            images: vec![1, 2, 0],
            n: 3,
            y: 1,
            chords: vec![
                (0, "a3*", 3, 4, "a1", 1, 4),
                (1, "a1*", 1, 4, "a3", 1, 2),
                (1, "a3*", 1, 2, "a1*", 1, 2),
                (0, "a1", 1, 2, "a3", 3, 4),
            ],
            expect: StandardPairType::Type1,
        },
        Fixture {
            name: "free_involution_type2",
            caption: "free involution on N_8 of sphere type: a two-crosscap curve and its \
                      antipodal image are disjoint with connected non-orientable complement",
            signature: "(5;-;[];{})",
            images: vec![1, 0, 0, 0, 0],
            n: 2,
            y: 1,
            chords: vec![
                (0, "a2*", 1, 2, "a3", 1, 2),
                (0, "a3*", 1, 2, "a2", 1, 2),
            ],
            expect: StandardPairType::Type2,
        },
        Fixture {
            name: "odd_prime_glide_kernel_type1",
            caption: "Z_3 action with a cone point and a glide in the kernel: the two-arc \
                      curve through the kernel glide meets its image once",
            signature: "(2;-;[3];{})",
            images: vec![1, 1, 0],
            n: 3,
            y: 1,
            chords: vec![
                (0, "a2*", 3, 4, "x1", 1, 4),
                (1, "x1'", 3, 4, "a2", 1, 2),
                (1, "a2*", 1, 2, "x1'", 1, 4),
                (0, "x1", 3, 4, "a2", 3, 4),
            ],
            expect: StandardPairType::Type1,
        },
        Fixture {
            name: "odd_prime_elliptic_type1",
            caption: "Z_3 action, all glide images nonzero: arc from a cone edge to its \
                      partner two copies over crosses its image once",
            signature: "(1;-;[3,3];{})",
            images: vec![1, 1, 2],
            n: 3,
            y: 1,
            chords: vec![
                (0, "x2'", 1, 2, "x1", 1, 3),
                (1, "x1'", 2, 3, "x1", 2, 3),
                (2, "x1'", 1, 3, "x2", 1, 2),
            ],
            expect: StandardPairType::Type1,
        },
        Fixture {
            name: "order4_elliptic_second_order4_type1",
            caption: "order-4 action with two order-4 cone points: wall arc of length three",
            signature: "(1;-;[4,4];{})",
            images: vec![1, 1, 1],
            n: 4,
            y: 1,
            chords: vec![
                (0, "x2'", 1, 2, "x1", 1, 5),
                (1, "x1'", 4, 5, "x1", 2, 5),
                (2, "x1'", 3, 5, "x1", 3, 5),
                (3, "x1'", 2, 5, "x2", 1, 2),
            ],
            expect: StandardPairType::Type1,
        },
        Fixture {
            name: "order4_elliptic_image2_type1",
            caption: "order-4 action with an order-2 cone point: wall arc of length two",
            signature: "(1;-;[2,4,4];{})",
            images: vec![2, 1, 1, 0],
            n: 4,
            y: 1,
            chords: vec![
                (0, "x1'", 1, 2, "x2", 1, 4),
                (1, "x2'", 3, 4, "x2", 1, 2),
                (2, "x2'", 1, 2, "x1", 1, 2),
            ],
            expect: StandardPairType::Type1,
        },
        Fixture {
            name: "connector_deck_order4_z1_type1",
            caption: "order-4 action generated by a connector, second generator of image 1",
            signature: "(1;-;[4];{()})",
            images: vec![1, 2, 1, 1],
            n: 4,
            y: 1,
            chords: vec![
                (1, "x1'", 1, 2, "e1'", 1, 3),
                (0, "e1", 2, 3, "x1", 1, 2),
            ],
            expect: StandardPairType::Type1,
        },
        Fixture {
            name: "connector_deck_order4_z2_type1",
            caption: "order-4 action generated by a connector, order-2 cone point crossed \
                      two copies over",
            signature: "(1;-;[2,4];{()})",
            images: vec![2, 1, 2, 1, 0],
            n: 4,
            y: 1,
            chords: vec![
                (0, "x1'", 1, 2, "e1", 1, 4),
                (1, "e1'", 3, 4, "e1", 1, 2),
                (2, "e1'", 1, 2, "x1", 1, 2),
            ],
            expect: StandardPairType::Type1,
        },
        Fixture {
            name: "glide_deck_kernel_glide_type1",
            caption: "order-4 glide deck generator with a second glide in the kernel: \
                      two-arc curve",
            signature: "(2;-;[];{()})",
            images: vec![2, 2, 1, 0],
            n: 4,
            y: 1,
            chords: vec![
                (0, "a2*", 3, 4, "a1", 1, 4),
                (1, "a1*", 1, 4, "a2", 1, 2),
                (1, "a2*", 1, 2, "a1*", 1, 2),
                (0, "a1", 1, 2, "a2", 3, 4),
            ],
            expect: StandardPairType::Type1,
        },
        Fixture {
            name: "glide_deck_glide_image2_type1",
            caption: "order-4 glide deck generator with a second glide of image 2: the \
                      curve crosses the second glide twice and four walls",
            signature: "(2;-;[];{()})",
            images: vec![2, 2, 1, 2],
            n: 4,
            y: 1,
            chords: vec![
                (0, "a2*", 1, 2, "a1", 1, 5),
                (1, "a1*", 1, 5, "a2", 1, 4),
                (3, "a2*", 1, 4, "a1", 2, 5),
                (0, "a1*", 2, 5, "a1", 3, 5),
                (1, "a1*", 3, 5, "a1", 4, 5),
                (2, "a1*", 4, 5, "a2", 1, 2),
            ],
            expect: StandardPairType::Type1,
        },
        Fixture {
            name: "glide_deck_connector_image2_type2",
            caption: "order-4 glide deck generator, connector of image 2: the connector \
                      arc two copies over is disjoint from its image",
            signature: "(2;-;[];{()^2})",
            images: vec![2, 2, 2, 2, 1, 1],
            n: 4,
            y: 1,
            chords: vec![
                (2, "e1'", 1, 2, "a1*", 1, 3),
                (1, "a1", 1, 3, "a1*", 2, 3),
                (0, "a1", 2, 3, "e1", 1, 2),
            ],
            expect: StandardPairType::Type2,
        },
        Fixture {
            name: "glide_deck_cone_type2",
            caption: "order-4 glide deck generator with order-2 cone points: the cone arc \
                      two copies over is disjoint from its image",
            signature: "(1;-;[2,2,2];{()})",
            images: vec![2, 2, 2, 2, 0, 1],
            n: 4,
            y: 1,
            chords: vec![
                (2, "x1'", 1, 2, "a1*", 1, 3),
                (1, "a1", 1, 3, "a1*", 2, 3),
                (0, "a1", 2, 3, "x1", 1, 2),
            ],
            expect: StandardPairType::Type2,
        },
        Fixture {
            name: "glide_deck_second_glide_image1_type1",
            caption: "order-4 glide deck generator, second glide of image 1: one wall arc",
            signature: "(2;-;[];{()})",
            images: vec![2, 0, 1, 1],
            n: 4,
            y: 1,
            chords: vec![
                (0, "a2*", 1, 2, "a1*", 1, 2),
                (3, "a1", 1, 2, "a2", 1, 2),
            ],
            expect: StandardPairType::Type1,
        },
        Fixture {
            name: "glide_deck_second_glide_image3_type2",
            caption: "order-4 glide deck generator, second glide of image 3: one wall arc, \
                      disjoint from its image",
            signature: "(2;-;[];{()})",
            images: vec![2, 0, 1, 3],
            n: 4,
            y: 1,
            chords: vec![
                (0, "a2*", 1, 2, "a1", 1, 2),
                (1, "a1*", 1, 2, "a2", 1, 2),
            ],
            expect: StandardPairType::Type2,
        },
        Fixture {
            name: "handle_deck_connector_image2_type1",
            caption: "orientable quotient, handle deck generator, connector of image 2: \
                      wall arc of length two",
            signature: "(1;+;[];{()^2})",
            images: vec![2, 2, 2, 2, 1, 0],
            n: 4,
            y: 1,
            chords: vec![
                (0, "e1'", 1, 2, "a1", 1, 4),
                (1, "a1'", 3, 4, "a1", 1, 2),
                (2, "a1'", 1, 2, "e1", 1, 2),
            ],
            expect: StandardPairType::Type1,
        },
        Fixture {
            name: "handle_deck_b_in_kernel_type2",
            caption: "orientable quotient, handle deck generator with the partner handle \
                      in the kernel: the partner arc is disjoint from its image",
            signature: "(1;+;[];{()})",
            images: vec![2, 0, 1, 0],
            n: 4,
            y: 1,
            chords: vec![(0, "b1'", 1, 2, "b1", 1, 2)],
            expect: StandardPairType::Type2,
        },
        Fixture {
            name: "reflection_axis_pushoff_type2",
            caption: "connector deck generator with a second connector in the kernel: the \
                      push-off of that reflection axis is two-sided and disjoint from its \
                      image",
            signature: "(1;-;[4];{()^2})",
            images: vec![1, 2, 2, 1, 0, 1],
            n: 4,
            y: 1,
            chords: vec![(0, "e2", 1, 2, "e2'", 1, 2)],
            expect: StandardPairType::Type2,
        },
    ]
}

fn main() {
    let out_dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    std::fs::create_dir_all(&out_dir).expect("create fixtures dir");
    let mut failures = 0;
    for f in fixtures() {
        let sig = NecSignature::parse(f.signature).expect(f.name);
        let theta = Epimorphism::new(&sig, f.n, f.images.clone()).expect(f.name);
        let glued = assemble_fundamental_domain(&sig, &theta, f.y).expect(f.name);
        let curve =
            CurveDiagram::from_json(&chords_json(&f.chords)).expect(f.name);
        let image = deck_image(&curve, &glued);
        match is_standard_pair(&curve, &image, &glued) {
            Ok(t) if t == f.expect => {
                let doc = serde_json::json!({
                    "name": f.name,
                    "caption": f.caption,
                    "signature": f.signature,
                    "epimorphism": theta.to_json(&sig),
                    "y": f.y,
                    "curve": curve.to_json(),
                    "expect": match f.expect {
                        StandardPairType::Type1 => "type1",
                        StandardPairType::Type2 => "type2",
                        StandardPairType::None => "none",
                    },
                });
                let path = out_dir.join(format!("{}.json", f.name));
                std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap() + "\n")
                    .expect("write fixture");
                println!("ok      {}", f.name);
            }
            Ok(t) => {
                failures += 1;
                println!("FAIL    {}: certified {:?}, expected {:?}", f.name, t, f.expect);
                diagnose(&curve, &glued);
            }
            Err(e) => {
                failures += 1;
                println!("ERROR   {}: {e}", f.name);
                diagnose(&curve, &glued);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}

fn diagnose(curve: &CurveDiagram, glued: &crosscap::polygon::GluedSurface) {
    use crosscap::polygon::{complement_profile, curve_properties, intersection_count};
    match curve_properties(curve, glued) {
        Ok(p) => println!("        props: simple={} two_sided={}", p.simple, p.two_sided),
        Err(e) => {
            println!("        props: {e}");
            return;
        }
    }
    let image = deck_image(curve, glued);
    match intersection_count(curve, &image, glued) {
        Ok(i) => println!("        i(c, y(c)) = {i}"),
        Err(e) => println!("        intersection: {e}"),
    }
    match complement_profile(&[curve.clone(), image], glued) {
        Ok(c) => println!(
            "        complement: connected={} non_orientable={}",
            c.connected, c.non_orientable
        ),
        Err(e) => println!("        complement: {e}"),
    }
    if let Ok(c) = complement_profile(std::slice::from_ref(curve), glued) {
        println!("        alone: connected={}", c.connected);
    }
}
