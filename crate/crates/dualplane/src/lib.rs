//! Dual bit-plane XOR cryptosystem.
//!
//! A message is expanded byte by byte into reversed 8-bit blocks, the
//! resulting stream is dealt by alternating position into two bit planes,
//! each plane is shaped into a near-square image, and each image is XORed
//! with its own freshly drawn random keystream. Decryption is the exact
//! mirror: XOR each share with its key, interleave the planes back into one
//! stream, and reassemble the bytes. The two encrypted shares travel with
//! their keys over an acknowledgement-gated two-phase session, so neither
//! phase alone carries enough to reconstruct the message.
//!
//! ```
//! use dualplane::{decrypt_message, encrypt_message, keystream};
//!
//! let mut rng = keystream::default_rng();
//! let bundle = encrypt_message(b"attack at dawn", &mut rng)?;
//! assert_eq!(decrypt_message(&bundle)?, b"attack at dawn");
//! # Ok::<(), dualplane::Error>(())
//! ```
//!
//! The scheme is obfuscation layered over transport, not modern
//! cryptography: each session ships its keys alongside the ciphertexts, so
//! confidentiality holds only against an observer who misses one of the two
//! phases. There is no authentication, integrity protection, or replay
//! defense.
//!
//! Modules follow the pipeline: [`bitcodec`] for bit encoding and the
//! odd/even split, [`shares`] for plane shaping and the DPS1 file format,
//! [`keystream`] for key generation and the DPK1 format, [`cipher`] for the
//! XOR core and end-to-end pipelines, and [`session`] for the DPW1 wire
//! protocol and its state machines.

pub mod bitcodec;
pub mod cipher;
pub mod error;
pub mod keystream;
pub mod session;
pub mod shares;

pub use bitcodec::BitSeq;
pub use cipher::{
    decrypt_message, decrypt_partial, encrypt_message, encrypt_message_with_keys, xor_plane,
    CipherBundle,
};
pub use error::{Error, Result};
pub use keystream::KeyStream;
pub use session::{Frame, FrameType, ReceiverSession, SenderSession};
pub use shares::{BitPlane, EncryptedShare, PlaneIndex};
