//! Bit-plane shares: rectangular bit grids, the DPS1 share file format, and
//! the plain-text bitmap export.
//!
//! # DPS1 share format
//!
//! ```text
//! +-------+---------+-------+-------+-----------+----------+----------+---------+
//! | magic | version | plane | flags | msg_len   | width    | height   | bits    |
//! | DPS1  | 0x01    | 1|2   | bit 0 | u32 BE    | u16 BE   | u16 BE   | packed  |
//! +-------+---------+-------+-------+-----------+----------+----------+---------+
//! ```
//!
//! Flags bit 0 marks a ciphertext share. Bits are row-major, packed eight per
//! byte most significant bit first, with the final byte zero-padded.

use std::io::{Read, Write};

use crate::bitcodec::BitSeq;
use crate::error::{Error, Result};

pub const SHARE_MAGIC: [u8; 4] = *b"DPS1";
pub const SHARE_VERSION: u8 = 0x01;

const FLAG_ENCRYPTED: u8 = 0x01;

/// Which of the two planes a share or key belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneIndex {
    One,
    Two,
}

impl PlaneIndex {
    pub fn as_u8(self) -> u8 {
        match self {
            PlaneIndex::One => 1,
            PlaneIndex::Two => 2,
        }
    }

    pub fn from_u8(value: u8) -> Option<PlaneIndex> {
        match value {
            1 => Some(PlaneIndex::One),
            2 => Some(PlaneIndex::Two),
            _ => None,
        }
    }
}

impl std::fmt::Display for PlaneIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// A rectangular grid of bits holding one plane of an encoded message.
///
/// Each message byte contributes exactly four bits to each plane, so
/// `width * height >= 4 * msg_len`; the trailing cells are padding. Padding
/// is zero when a plane is shaped and XORs through encryption like payload,
/// so ciphertext padding is key material. `msg_len` bounds the payload on
/// the way back out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitPlane {
    plane_index: PlaneIndex,
    width: u16,
    height: u16,
    msg_len: u32,
    is_encrypted: bool,
    bits: BitSeq,
}

/// A [`BitPlane`] whose bits have been XORed with a keystream
/// (`is_encrypted` set).
pub type EncryptedShare = BitPlane;

impl BitPlane {
    /// Assembles a plane from explicit fields, validating the dimensional
    /// invariants.
    pub fn from_parts(
        plane_index: PlaneIndex,
        width: u16,
        height: u16,
        msg_len: u32,
        is_encrypted: bool,
        bits: BitSeq,
    ) -> Result<BitPlane> {
        let cells = width as usize * height as usize;
        if bits.len() != cells {
            return Err(Error::InconsistentLength {
                bits: bits.len(),
                msg_len: msg_len as usize,
            });
        }
        if cells < msg_len as usize * 4 {
            return Err(Error::InconsistentLength {
                bits: bits.len(),
                msg_len: msg_len as usize,
            });
        }
        Ok(BitPlane {
            plane_index,
            width,
            height,
            msg_len,
            is_encrypted,
            bits,
        })
    }

    pub fn plane_index(&self) -> PlaneIndex {
        self.plane_index
    }

    pub fn width(&self) -> u16 {
        self.width
    }

    pub fn height(&self) -> u16 {
        self.height
    }

    /// Original message length in bytes.
    pub fn msg_len(&self) -> usize {
        self.msg_len as usize
    }

    pub fn is_encrypted(&self) -> bool {
        self.is_encrypted
    }

    pub fn bits(&self) -> &BitSeq {
        &self.bits
    }

    /// Total grid size in bits, padding included.
    pub fn bit_len(&self) -> usize {
        self.width as usize * self.height as usize
    }

    /// Payload size in bits: four per message byte.
    pub fn payload_len(&self) -> usize {
        self.msg_len as usize * 4
    }

    /// Same grid with new bits and encryption flag; used by the XOR core.
    pub(crate) fn with_bits(&self, bits: BitSeq, is_encrypted: bool) -> BitPlane {
        debug_assert_eq!(bits.len(), self.bit_len());
        BitPlane {
            plane_index: self.plane_index,
            width: self.width,
            height: self.height,
            msg_len: self.msg_len,
            is_encrypted,
            bits,
        }
    }
}

/// Smallest `w` with `w * w >= n`.
fn ceil_sqrt(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let mut w = (n as f64).sqrt() as usize;
    while w * w < n {
        w += 1;
    }
    while w > 1 && (w - 1) * (w - 1) >= n {
        w -= 1;
    }
    w
}

/// Shapes a flat bit sequence into a near-square plane.
///
/// `bits` must hold exactly `4 * msg_len` bits. The width is the ceiling of
/// the square root of the bit count; trailing padding cells are zero.
pub fn shape_plane(bits: BitSeq, plane_index: PlaneIndex, msg_len: usize) -> Result<BitPlane> {
    if bits.len() != msg_len * 4 {
        return Err(Error::InconsistentLength {
            bits: bits.len(),
            msg_len,
        });
    }
    let n = bits.len();
    if n == 0 {
        return BitPlane::from_parts(plane_index, 0, 0, 0, false, bits);
    }
    let width = ceil_sqrt(n);
    let height = n.div_ceil(width);
    if width > u16::MAX as usize || height > u16::MAX as usize {
        return Err(Error::MessageTooLarge(msg_len));
    }
    let mut bits = bits;
    bits.extend(std::iter::repeat_n(false, width * height - n));
    BitPlane::from_parts(
        plane_index,
        width as u16,
        height as u16,
        msg_len as u32,
        false,
        bits,
    )
}

/// Returns the payload bits of a plane in row-major order, padding stripped.
pub fn flatten_plane(plane: &BitPlane) -> BitSeq {
    plane.bits.truncated(plane.payload_len())
}

/// Writes a plane as a DPS1 record.
pub fn write_share<W: Write>(plane: &BitPlane, dest: &mut W) -> Result<()> {
    dest.write_all(&SHARE_MAGIC)?;
    dest.write_all(&[SHARE_VERSION])?;
    dest.write_all(&[plane.plane_index.as_u8()])?;
    dest.write_all(&[if plane.is_encrypted { FLAG_ENCRYPTED } else { 0 }])?;
    dest.write_all(&plane.msg_len.to_be_bytes())?;
    dest.write_all(&plane.width.to_be_bytes())?;
    dest.write_all(&plane.height.to_be_bytes())?;
    dest.write_all(&plane.bits.to_packed_bytes())?;
    Ok(())
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

/// Reads a declared-size payload without trusting the declaration for the
/// allocation: the buffer grows only as bytes actually arrive.
pub(crate) fn read_payload(r: &mut impl Read, n_bytes: usize, what: &str) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    r.take(n_bytes as u64).read_to_end(&mut buf)?;
    if buf.len() != n_bytes {
        return Err(Error::CorruptShare(format!("truncated {what}")));
    }
    Ok(buf)
}

/// Reads a DPS1 record, reproducing the plane bit-exactly.
///
/// Consumes exactly one record from the source, so records can be read back
/// to back from one stream.
pub fn read_share<R: Read>(source: &mut R) -> Result<BitPlane> {
    let mut magic = [0u8; 4];
    read_exact_or(source, &mut magic, "share header")?;
    if magic != SHARE_MAGIC {
        return Err(Error::NotAShare(magic));
    }

    let mut head = [0u8; 3];
    read_exact_or(source, &mut head, "share header")?;
    let [version, plane, flags] = head;
    if version != SHARE_VERSION {
        return Err(Error::UnsupportedVersion(version));
    }
    let plane_index = PlaneIndex::from_u8(plane)
        .ok_or_else(|| Error::CorruptShare(format!("invalid plane index {plane}")))?;
    if flags & !FLAG_ENCRYPTED != 0 {
        return Err(Error::CorruptShare(format!("unknown flag bits {flags:#04x}")));
    }

    let mut len_buf = [0u8; 4];
    read_exact_or(source, &mut len_buf, "share header")?;
    let msg_len = u32::from_be_bytes(len_buf);
    let mut dim_buf = [0u8; 2];
    read_exact_or(source, &mut dim_buf, "share header")?;
    let width = u16::from_be_bytes(dim_buf);
    read_exact_or(source, &mut dim_buf, "share header")?;
    let height = u16::from_be_bytes(dim_buf);

    let n_bits = width as usize * height as usize;
    let packed = read_payload(source, n_bits.div_ceil(8), "share payload")?;
    let bits = BitSeq::from_packed_bytes(&packed, n_bits)?;

    BitPlane::from_parts(
        plane_index,
        width,
        height,
        msg_len,
        flags & FLAG_ENCRYPTED != 0,
        bits,
    )
    .map_err(|_| Error::CorruptShare(format!("{width}x{height} grid cannot hold a {msg_len} byte message")))
}

/// Writes a plane as a plain-text portable bitmap (`P1`); bit 1 renders
/// black. The export drops `msg_len` and `plane_index`, so it is one-way.
pub fn export_bitmap<W: Write>(plane: &BitPlane, dest: &mut W) -> Result<()> {
    if plane.width == 0 || plane.height == 0 {
        return Err(Error::NothingToExport);
    }
    writeln!(dest, "P1")?;
    writeln!(dest, "{} {}", plane.width, plane.height)?;
    for row in plane.bits.as_bools().chunks(plane.width as usize) {
        let line: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
        writeln!(dest, "{}", line.join(" "))?;
    }
    Ok(())
}
