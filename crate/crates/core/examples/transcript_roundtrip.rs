//! Transcripts are JSON lines: a header, then one record per inning. They
//! reload and re-validate offline.

use rothberger::game::{validate, Transcript};
use rothberger::sim::{inspect, RunConfig};

const CONFIG: &str = r#"
game = "open-covers"
innings = 12
window = 3
seed = 5

[group]
component = { kind = "cyclic", order = 2 }

[one]
kind = "random-cover"

[two]
kind = "sigma"
"#;

fn main() -> rothberger::Result<()> {
    let config = RunConfig::from_toml(CONFIG)?;
    let t = config.run()?;
    let path = std::env::temp_dir().join("rothberger-roundtrip.jsonl");
    t.save(&path)?;

    let back = Transcript::load(&path)?;
    assert_eq!(back, t);
    assert_eq!(validate(&back), validate(&t));
    let (text, _) = inspect(&back);
    print!("{text}");
    println!("\nfirst line of {}:", path.display());
    println!("{}", t.to_jsonl().lines().next().unwrap_or_default());
    Ok(())
}
