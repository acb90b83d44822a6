//! Seeded random source with a fixed generator family.
//!
//! Every stochastic operation in this crate takes an explicit [`RandomSource`];
//! there is no global random state. An identical seed yields an identical draw
//! stream regardless of worker count, because draws always happen on a single
//! thread before any parallel section.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Identifier of the generator family backing [`RandomSource`].
pub const RNG_ALGORITHM: &str = "chacha8";

/// A 64-bit seed bound to a fixed generator family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSource {
    pub seed: u64,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource { seed }
    }

    /// Fresh generator positioned at the start of the seed's stream.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// Independent substream for the same seed (e.g. data draws vs. direction
    /// draws), so consumers cannot perturb each other's sequences.
    pub fn stream(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

impl Serialize for RandomSource {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RandomSource", 2)?;
        s.serialize_field("seed", &self.seed)?;
        s.serialize_field("algorithm", RNG_ALGORITHM)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for RandomSource {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RandomSource;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a map with a `seed` field and optional `algorithm`")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<RandomSource, A::Error> {
                let mut seed: Option<u64> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "seed" => seed = Some(map.next_value()?),
                        "algorithm" => {
                            let alg: String = map.next_value()?;
                            if alg != RNG_ALGORITHM {
                                return Err(de::Error::custom(format!(
                                    "unsupported rng algorithm `{alg}` (expected `{RNG_ALGORITHM}`)"
                                )));
                            }
                        }
                        _ => {
                            let _: de::IgnoredAny = map.next_value()?;
                        }
                    }
                }
                Ok(RandomSource {
                    seed: seed.ok_or_else(|| de::Error::missing_field("seed"))?,
                })
            }
        }
        deserializer.deserialize_map(V)
    }
}
