use pairdepth_cli::request::parse;
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn monomial(n: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(0u32..4, n).prop_map(move |e| {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(v, &k)| if k == 1 { VARS[v].to_string() } else { format!("{}^{k}", VARS[v]) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    })
}

fn ideal(n: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(monomial(n), 0..4).prop_map(|g| {
        if g.is_empty() {
            "(0)".into()
        } else {
            format!("({})", g.join(", "))
        }
    })
}

fn request() -> impl Strategy<Value = String> {
    (1usize..=3, prop::sample::select(vec!["Q", "F2", "F7"])).prop_flat_map(|(n, field)| {
        let ring = format!("{field}[{}]", VARS[..n].join(","));
        (Just(ring), ideal(n), ideal(n), ideal(n), prop::collection::vec(monomial(n), 1..3), -1i64..3).prop_map(
            |(ring, i, j, b, seq, k)| {
                // M = (1)/B always has B ⊆ A
                vec![
                    format!("{ring}; depth I={i} J={j} M=(1)/{b}"),
                    format!("{ring};wset I={i}   J={j}"),
                    format!("{ring}; regseq M=(1)/{b} k={k} seq=[{}]", seq.join(",")),
                ]
            },
        )
    })
    .prop_flat_map(prop::sample::select)
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(src in request()) {
        let r = parse(&src).unwrap();
        let printed = r.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), r.clone());
        // printing is canonical
        prop_assert_eq!(parse(&printed).unwrap().to_string(), printed);
    }

    #[test]
    fn garbage_never_panics(src in "[ -~]{0,40}") {
        let _ = parse(&src);
    }
}
