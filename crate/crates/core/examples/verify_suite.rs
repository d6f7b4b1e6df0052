//! Runs one verification suite in-process at a reduced scale.

use rothberger::sim::{run_suite, Suite};

fn main() {
    let suite = std::env::args()
        .nth(1)
        .and_then(|s| Suite::ALL.into_iter().find(|x| x.name() == s))
        .unwrap_or(Suite::Schedule);
    let report = run_suite(suite, 7, 0.2);
    print!("{report}");
}
