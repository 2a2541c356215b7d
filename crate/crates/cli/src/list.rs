use clap::Args;
use r2reduce::catalog::{list_rules, Family, RuleDescriptor};

use crate::{csv_field, Exit, Format};

#[derive(Args)]
pub struct ListArgs {
    /// Only rules of this family (positive-exp, inverse-exp, mixed-tilde,
    /// general-h, r-integral).
    #[arg(long)]
    family: Option<String>,

    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

pub const CSV_HEADER: &str = "id,alias,triple,family,coefficient_pattern,tilde,status,note";

pub fn run(args: &ListArgs) -> Result<u8, Exit> {
    let family = match &args.family {
        Some(s) => Some(s.parse::<Family>().map_err(|_| {
            let known: Vec<&str> = Family::ALL.iter().map(|f| f.as_str()).collect();
            Exit::usage(format!("unknown family {s}; expected one of {}", known.join(", ")))
        })?),
        None => None,
    };
    let rules: Vec<RuleDescriptor> = list_rules()
        .into_iter()
        .filter(|r| family.is_none_or(|f| r.family == f))
        .collect();
    print!("{}", render(&rules, args.format));
    Ok(0)
}

fn render(rules: &[RuleDescriptor], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rules).expect("descriptors serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = format!("{CSV_HEADER}\n");
            for r in rules {
                let fields = [
                    r.id.clone(),
                    r.alias.clone(),
                    r.triple.clone(),
                    r.family.to_string(),
                    r.coefficient_pattern.join(";"),
                    r.tilde.to_string(),
                    r.status.as_str().to_string(),
                    r.note.clone(),
                ];
                let row: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
                s.push_str(&row.join(","));
                s.push('\n');
            }
            s
        }
        Format::Human => {
            let mut s = format!(
                "{:<20} {:<5} {:<14} {:<12} {:<10} {:<8} {}\n",
                "id", "alias", "triple", "family", "status", "coefs", "note"
            );
            for r in rules {
                let mut coefs = r.coefficient_pattern.concat();
                if r.tilde {
                    coefs.push('~');
                }
                s.push_str(&format!(
                    "{:<20} {:<5} {:<14} {:<12} {:<10} {:<8} {}\n",
                    r.id,
                    r.alias,
                    r.triple,
                    r.family.as_str(),
                    r.status.as_str(),
                    coefs,
                    r.note
                ));
            }
            s
        }
    }
}
