//! Random keystream generation, key resizing, and the DPK1 key file format.
//!
//! Keys are pools of uniform random bits drawn directly from a
//! cryptographically strong source, one independent pool per plane, fresh on
//! every encryption. Generating bits directly avoids the bias a
//! decimal-to-binary detour would introduce. The deterministic seeded mode
//! exists for reproducible tests and must be opted into explicitly.
//!
//! # DPK1 key format
//!
//! ```text
//! +-------+-------+-----------+-----------------------------+
//! | magic | plane | bit count | bits, packed MSB-first,     |
//! | DPK1  | 1|2   | u32 BE    | final byte zero-padded      |
//! +-------+-------+-----------+-----------------------------+
//! ```

use std::io::{Read, Write};

use rand::rngs::OsRng;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::bitcodec::BitSeq;
use crate::error::{Error, Result};
use crate::shares::{BitPlane, PlaneIndex};

pub const KEY_MAGIC: [u8; 4] = *b"DPK1";

/// A pool of random bits sized to one plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyStream {
    bits: BitSeq,
    plane_index: PlaneIndex,
    seed_info: Option<u64>,
}

impl KeyStream {
    pub fn new(bits: BitSeq, plane_index: PlaneIndex) -> KeyStream {
        KeyStream {
            bits,
            plane_index,
            seed_info: None,
        }
    }

    /// Records the RNG seed the bits came from; reproducible-test use only.
    pub fn with_seed_info(mut self, seed: u64) -> KeyStream {
        self.seed_info = Some(seed);
        self
    }

    pub fn bits(&self) -> &BitSeq {
        &self.bits
    }

    pub fn plane_index(&self) -> PlaneIndex {
        self.plane_index
    }

    pub fn seed_info(&self) -> Option<u64> {
        self.seed_info
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

/// The process-default random source: operating system entropy.
pub fn default_rng() -> impl RngCore {
    OsRng
}

/// A boxed random source: OS entropy, or a deterministic stream when a seed
/// is supplied.
pub fn rng_from_seed(seed: Option<u64>) -> Box<dyn RngCore> {
    match seed {
        Some(s) => Box::new(ChaCha20Rng::seed_from_u64(s)),
        None => Box::new(OsRng),
    }
}

fn draw_bits<R: RngCore + ?Sized>(n_bits: usize, rng: &mut R) -> Result<BitSeq> {
    let mut buf = vec![0u8; n_bits.div_ceil(8)];
    rng.try_fill_bytes(&mut buf)?;
    BitSeq::from_packed_bytes(&buf, n_bits)
}

/// Draws `n_bits` independent uniform random bits for the given plane.
pub fn generate_key<R: RngCore + ?Sized>(
    n_bits: usize,
    plane_index: PlaneIndex,
    rng: &mut R,
) -> Result<KeyStream> {
    Ok(KeyStream::new(draw_bits(n_bits, rng)?, plane_index))
}

/// Sizes a key to a plane: longer keys are truncated, shorter keys are
/// extended with fresh random bits (never by repetition).
///
/// Extension needs a random source; without one the call fails with
/// [`Error::CannotExtend`].
pub fn resize_key(
    key: &KeyStream,
    plane: &BitPlane,
    rng: Option<&mut dyn RngCore>,
) -> Result<KeyStream> {
    let target = plane.bit_len();
    let bits = if key.len() >= target {
        key.bits.truncated(target)
    } else {
        let mut rng = rng.ok_or(Error::CannotExtend)?;
        let mut bits = key.bits.clone();
        bits.extend(draw_bits(target - key.len(), &mut rng)?.iter());
        bits
    };
    Ok(KeyStream {
        bits,
        plane_index: key.plane_index,
        seed_info: key.seed_info,
    })
}

/// Writes a key as a DPK1 record.
pub fn write_key<W: Write>(key: &KeyStream, dest: &mut W) -> Result<()> {
    dest.write_all(&KEY_MAGIC)?;
    dest.write_all(&[key.plane_index.as_u8()])?;
    dest.write_all(&(key.bits.len() as u32).to_be_bytes())?;
    dest.write_all(&key.bits.to_packed_bytes())?;
    Ok(())
}

/// Reads one DPK1 record, consuming exactly its bytes from the source.
pub fn read_key<R: Read>(source: &mut R) -> Result<KeyStream> {
    let mut magic = [0u8; 4];
    read_exact_or(source, &mut magic, "key header")?;
    if magic != KEY_MAGIC {
        return Err(Error::NotAKey(magic));
    }

    let mut plane = [0u8; 1];
    read_exact_or(source, &mut plane, "key header")?;
    let plane_index = PlaneIndex::from_u8(plane[0])
        .ok_or_else(|| Error::CorruptShare(format!("invalid plane index {}", plane[0])))?;

    let mut len_buf = [0u8; 4];
    read_exact_or(source, &mut len_buf, "key header")?;
    let n_bits = u32::from_be_bytes(len_buf) as usize;
    let packed = crate::shares::read_payload(source, n_bits.div_ceil(8), "key payload")?;

    Ok(KeyStream::new(
        BitSeq::from_packed_bytes(&packed, n_bits)?,
        plane_index,
    ))
}

fn read_exact_or(r: &mut impl Read, buf: &mut [u8], what: &str) -> Result<()> {
    r.read_exact(buf).map_err(|e| {
        if e.kind() == std::io::ErrorKind::UnexpectedEof {
            Error::CorruptShare(format!("truncated {what}"))
        } else {
            Error::Io(e)
        }
    })
}
