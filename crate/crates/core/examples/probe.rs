use equilines_core::enumerate::load_or_sample;
use equilines_core::poly::parse_poly;
use equilines_core::ruleout::{rule_out, FinalVerdict, RuleoutContext};
use std::path::Path;

fn main() {
    let p47 = load_or_sample(Path::new("cache"), 47, 7, 0, 1_000_000).unwrap();
    let ctx = RuleoutContext {
        class_set_47: Some(p47),
        node_budget: 1_000_000_000,
        second_level: true,
    };
    let cases = [
        ("quad92", "(x+5)^32*(x-9)^13*(x-11)^2*(x^2-21*x+92)"),
        ("fiveint", "(x+5)^32*(x-7)*(x-9)^14*(x-12)*(x-15)"),
        ("sixint_ev15", "(x+5)^32*(x-7)*(x-8)*(x-9)^12*(x-11)^2*(x-15)"),
        ("sixint_ev13", "(x+5)^32*(x-7)^2*(x-8)*(x-9)^10*(x-11)^2*(x-13)^2"),
        ("fourint", "(x+5)^32*(x-4)*(x-9)^10*(x-11)^6"),
        ("quad76", "(x+5)^32*(x-7)*(x-9)^10*(x-11)^4*(x^2-19*x+76)"),
        ("quad72", "(x+5)^32*(x-9)^12*(x-11)^3*(x^2-19*x+72)"),
        ("quad64", "(x+5)^32*(x-9)^13*(x-13)^2*(x^2-17*x+64)"),
        ("setA", "(x+5)^32*(x-9)^16*(x-16)"),
        ("setB1", "(x+5)^32*(x-8)*(x-9)^8*(x^2-20*x+95)^4"),
    ];
    for (name, s) in cases {
        let t0 = std::time::Instant::now();
        let p = parse_poly(s).unwrap();
        let log = rule_out(&p, &ctx);
        let verdict = match &log.final_verdict {
            FinalVerdict::RuledOut => "RULED_OUT".to_string(),
            FinalVerdict::MechanicalStepsExhausted { manual_refs } => {
                format!("MANUAL ({} refs)", manual_refs.len())
            }
            FinalVerdict::External { .. } => "EXTERNAL".to_string(),
            FinalVerdict::BudgetExhausted { detail } => format!("BUDGET: {detail}"),
        };
        println!("== {name}: {verdict} in {:?}", t0.elapsed());
        for st in &log.steps {
            println!("   [{}] {}", st.kind, st.verdict);
        }
    }
}
