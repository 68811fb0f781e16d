use std::io;

use thiserror::Error;

/// Errors produced by the codec, keying, share, cipher, and session layers.
#[derive(Debug, Error)]
pub enum Error {
    /// A bit block that must be exactly 8 bits long was not.
    #[error("malformed block: expected 8 bits, got {0}")]
    MalformedBlock(usize),

    /// A bit stream whose length does not satisfy the operation's shape
    /// requirement (a multiple of 8 for byte decoding, even for splitting).
    #[error("malformed bit stream: length {len} is not {expected}")]
    MalformedStream { len: usize, expected: &'static str },

    /// The two planes handed to a merge have different lengths.
    #[error("share length mismatch: odd plane has {odd} bits, even plane has {even}")]
    ShareLengthMismatch { odd: usize, even: usize },

    /// The operating system's random source failed.
    #[error("entropy source unavailable: {0}")]
    EntropyUnavailable(#[from] rand::Error),

    /// A key shorter than its plane cannot be extended without a random source.
    #[error("cannot extend key: no random source available")]
    CannotExtend,

    /// The bit count handed to plane shaping disagrees with the message length.
    #[error("inconsistent length: {bits} bits for a {msg_len} byte message")]
    InconsistentLength { bits: usize, msg_len: usize },

    /// The message would need plane dimensions beyond the share format's range.
    #[error("message of {0} bytes exceeds the maximum share dimensions")]
    MessageTooLarge(usize),

    /// The input does not start with the share file magic.
    #[error("not a share file: bad magic {0:02x?}")]
    NotAShare([u8; 4]),

    /// The input does not start with the key file magic.
    #[error("not a key file: bad magic {0:02x?}")]
    NotAKey([u8; 4]),

    /// A share or key record is truncated or internally inconsistent.
    #[error("corrupt record: {0}")]
    CorruptShare(String),

    /// The record carries a format version this build does not understand.
    #[error("unsupported format version {0:#04x}")]
    UnsupportedVersion(u8),

    /// Key and plane sizes differ, so a bitwise XOR is impossible.
    #[error("key size mismatch: key has {key_bits} bits, plane has {plane_bits}")]
    KeySizeMismatch { key_bits: usize, plane_bits: usize },

    /// The key belongs to the other plane.
    #[error("wrong key: key is for plane {key_plane}, share is plane {share_plane}")]
    WrongKey { key_plane: u8, share_plane: u8 },

    /// A zero-dimension plane has no pixels to export.
    #[error("nothing to export: plane has zero dimensions")]
    NothingToExport,

    /// A cipher bundle violates its structural invariants.
    #[error("invalid bundle: {0}")]
    InvalidBundle(String),

    /// A session peer sent a frame that is illegal in the current phase.
    #[error("protocol violation: {0}")]
    ProtocolViolation(String),

    /// The session peer reported an error and closed.
    #[error("peer reported error: {0}")]
    Remote(String),

    /// A wire frame has a bad magic, version, type, or length field.
    #[error("malformed frame: {0}")]
    MalformedFrame(String),

    /// A wire frame declares a payload above the 16 MiB cap.
    #[error("oversize frame: {0} byte payload exceeds cap")]
    OversizeFrame(u32),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
