//! Conversion between bytes and the reversed-bit representation, plus the
//! odd/even positional split that produces the two plane shares.
//!
//! Every byte is expanded to its 8-bit binary form and stored least
//! significant bit first, so `0x61` (`01100001`) becomes `1 0 0 0 0 1 1 0`.
//! Bit positions are 1-indexed throughout: the odd positions 1, 3, 5, ... of
//! a stream feed plane 1 and the even positions feed plane 2. Reversal is
//! applied per byte; the odd/even split runs over the whole concatenated
//! stream.

use crate::error::{Error, Result};

/// An ordered sequence of bits.
///
/// Message-derived sequences always hold `8 * byte_count` bits.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BitSeq(Vec<bool>);

impl BitSeq {
    pub fn new() -> Self {
        BitSeq(Vec::new())
    }

    pub fn with_capacity(n: usize) -> Self {
        BitSeq(Vec::with_capacity(n))
    }

    /// A sequence of `n` zero bits.
    pub fn zeros(n: usize) -> Self {
        BitSeq(vec![false; n])
    }

    pub fn from_bools(bits: Vec<bool>) -> Self {
        BitSeq(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit);
    }

    pub fn get(&self, index: usize) -> Option<bool> {
        self.0.get(index).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    pub fn as_bools(&self) -> &[bool] {
        &self.0
    }

    /// Number of set bits.
    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// First `n` bits as a new sequence. `n` must not exceed the length.
    pub fn truncated(&self, n: usize) -> BitSeq {
        BitSeq(self.0[..n].to_vec())
    }

    /// Packs the bits into bytes, most significant bit first, final byte
    /// zero-padded.
    pub fn to_packed_bytes(&self) -> Vec<u8> {
        self.0
            .chunks(8)
            .map(|chunk| {
                chunk
                    .iter()
                    .enumerate()
                    .fold(0u8, |byte, (i, &bit)| byte | (u8::from(bit) << (7 - i)))
            })
            .collect()
    }

    /// Unpacks `n_bits` bits from MSB-first packed bytes.
    ///
    /// `bytes` must be exactly `ceil(n_bits / 8)` long; padding bits in the
    /// final byte are ignored.
    pub fn from_packed_bytes(bytes: &[u8], n_bits: usize) -> Result<Self> {
        if bytes.len() != n_bits.div_ceil(8) {
            return Err(Error::CorruptShare(format!(
                "{} packed bytes cannot hold exactly {} bits",
                bytes.len(),
                n_bits
            )));
        }
        let mut bits = Vec::with_capacity(bytes.len() * 8);
        for &byte in bytes {
            for i in 0..8 {
                bits.push(byte & (0x80 >> i) != 0);
            }
        }
        bits.truncate(n_bits);
        Ok(BitSeq(bits))
    }
}

impl std::ops::Index<usize> for BitSeq {
    type Output = bool;

    fn index(&self, index: usize) -> &bool {
        &self.0[index]
    }
}

impl FromIterator<bool> for BitSeq {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        BitSeq(iter.into_iter().collect())
    }
}

impl Extend<bool> for BitSeq {
    fn extend<I: IntoIterator<Item = bool>>(&mut self, iter: I) {
        self.0.extend(iter);
    }
}

impl std::fmt::Debug for BitSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitSeq(")?;
        for &bit in &self.0 {
            write!(f, "{}", if bit { '1' } else { '0' })?;
        }
        write!(f, ")")
    }
}

/// Builds a [`BitSeq`] from 0/1 literals: `bits![1, 0, 0, 1]`.
#[macro_export]
macro_rules! bits {
    () => { $crate::bitcodec::BitSeq::new() };
    ($($b:expr),+ $(,)?) => {
        $crate::bitcodec::BitSeq::from_bools(vec![$($b != 0),+])
    };
}

/// Expands a byte to its 8-bit binary form, least significant bit first.
pub fn byte_to_reversed_bits(b: u8) -> BitSeq {
    (0..8).map(|i| b & (1 << i) != 0).collect()
}

/// Inverse of [`byte_to_reversed_bits`]; the block must be exactly 8 bits.
pub fn reversed_bits_to_byte(bits: &BitSeq) -> Result<u8> {
    if bits.len() != 8 {
        return Err(Error::MalformedBlock(bits.len()));
    }
    Ok(bits
        .iter()
        .enumerate()
        .fold(0u8, |byte, (i, bit)| byte | (u8::from(bit) << i)))
}

/// Encodes a message as the concatenation of each byte's reversed bits.
pub fn encode_bits(message: &[u8]) -> BitSeq {
    let mut out = BitSeq::with_capacity(message.len() * 8);
    for &b in message {
        for i in 0..8 {
            out.push(b & (1 << i) != 0);
        }
    }
    out
}

/// Decodes a stream of reversed-bit blocks back into bytes.
pub fn decode_bits(stream: &BitSeq) -> Result<Vec<u8>> {
    if !stream.len().is_multiple_of(8) {
        return Err(Error::MalformedStream {
            len: stream.len(),
            expected: "a multiple of 8",
        });
    }
    Ok(stream
        .as_bools()
        .chunks_exact(8)
        .map(|block| {
            block
                .iter()
                .enumerate()
                .fold(0u8, |byte, (i, &bit)| byte | (u8::from(bit) << i))
        })
        .collect())
}

/// Splits a stream into its 1-indexed odd and even positions.
///
/// The first bit lands in the odd sequence (plane 1).
pub fn split_odd_even(stream: &BitSeq) -> Result<(BitSeq, BitSeq)> {
    if !stream.len().is_multiple_of(2) {
        return Err(Error::MalformedStream {
            len: stream.len(),
            expected: "even",
        });
    }
    let mut odd = BitSeq::with_capacity(stream.len() / 2);
    let mut even = BitSeq::with_capacity(stream.len() / 2);
    for pair in stream.as_bools().chunks_exact(2) {
        odd.push(pair[0]);
        even.push(pair[1]);
    }
    Ok((odd, even))
}

/// Interleaves the odd and even sequences back into one stream.
pub fn merge_odd_even(odd: &BitSeq, even: &BitSeq) -> Result<BitSeq> {
    if odd.len() != even.len() {
        return Err(Error::ShareLengthMismatch {
            odd: odd.len(),
            even: even.len(),
        });
    }
    let mut out = BitSeq::with_capacity(odd.len() * 2);
    for (o, e) in odd.iter().zip(even.iter()) {
        out.push(o);
        out.push(e);
    }
    Ok(out)
}
