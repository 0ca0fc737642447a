use serde::{Deserialize, Serialize};

use hpart::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A partition as stored on disk: `{"k": k, "parts": [[1-indexed ids], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDocument {
    pub k: usize,
    pub parts: Vec<Vec<usize>>,
}

impl PartitionDocument {
    pub fn from_partition(partition: &Partition) -> Self {
        Self {
            k: partition.k(),
            parts: partition
                .parts()
                .iter()
                .map(|p| p.iter().map(|v| v + 1).collect())
                .collect(),
        }
    }

    /// Parts with 0-indexed ids. Ids of 0 become `usize::MAX` so that the
    /// validator reports them as out of range.
    pub fn zero_indexed(&self) -> Vec<Vec<usize>> {
        self.parts
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&v| v.checked_sub(1).unwrap_or(usize::MAX))
                    .collect()
            })
            .collect()
    }
}

/// JSON (sorted keys, trailing newline) or one line of ids per part.
pub fn format_partition(partition: &Partition, format: Format) -> String {
    let doc = PartitionDocument::from_partition(partition);
    match format {
        Format::Json => {
            let value = serde_json::to_value(&doc).expect("plain data");
            format!("{value}\n")
        }
        Format::Text => doc
            .parts
            .iter()
            .map(|p| {
                let ids: Vec<String> = p.iter().map(usize::to_string).collect();
                ids.join(" ") + "\n"
            })
            .collect(),
    }
}
