use std::fmt;
use std::str::FromStr;

/// The corruption models a channel may apply to a stored word.
///
/// `Unrestricted` allows any sequence of tandem duplications with lengths
/// from L. `Disjoint` applies one simultaneous round of duplications to
/// non-overlapping blocks of the original word. `EqualLength` allows any
/// sequence as long as all duplications share a single length from L.
/// `DisjointEqualLength` combines both restrictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelModel {
    Unrestricted,
    Disjoint,
    EqualLength,
    DisjointEqualLength,
}

impl ChannelModel {
    pub fn as_str(self) -> &'static str {
        match self {
            ChannelModel::Unrestricted => "unrestricted",
            ChannelModel::Disjoint => "disjoint",
            ChannelModel::EqualLength => "equal_length",
            ChannelModel::DisjointEqualLength => "disjoint_equal_length",
        }
    }

    /// Whether all duplications in one corruption must share a single length.
    pub fn requires_equal_lengths(self) -> bool {
        matches!(
            self,
            ChannelModel::EqualLength | ChannelModel::DisjointEqualLength
        )
    }

    /// Whether duplications are applied simultaneously to disjoint blocks.
    pub fn is_disjoint(self) -> bool {
        matches!(
            self,
            ChannelModel::Disjoint | ChannelModel::DisjointEqualLength
        )
    }
}

impl fmt::Display for ChannelModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ChannelModel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unrestricted" => Ok(ChannelModel::Unrestricted),
            "disjoint" => Ok(ChannelModel::Disjoint),
            "equal_length" => Ok(ChannelModel::EqualLength),
            "disjoint_equal_length" => Ok(ChannelModel::DisjointEqualLength),
            other => Err(format!("unknown model {:?}", other)),
        }
    }
}
