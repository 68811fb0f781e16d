//! The XOR cipher core and the end-to-end encrypt/decrypt pipelines.
//!
//! Encryption: encode the message as reversed bits, split odd/even into two
//! planes, shape each into a grid, draw one independent keystream per plane,
//! and XOR. Decryption runs the exact inverse. XOR with the same key twice
//! is the identity, so the same core serves both directions.
//!
//! Confidentiality here is that of the transfer scheme as a whole: keys
//! travel alongside their ciphertexts, so a single captured layer reveals
//! only alternate bit positions, and only an observer missing a layer learns
//! nothing. There is no authentication or integrity protection.

use rand::RngCore;

use crate::bitcodec::{self, BitSeq};
use crate::error::{Error, Result};
use crate::keystream::{generate_key, KeyStream};
use crate::shares::{flatten_plane, shape_plane, BitPlane, EncryptedShare, PlaneIndex};

/// Everything one encryption produces: two ciphertext shares and the two
/// keystreams that made them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherBundle {
    share1: EncryptedShare,
    share2: EncryptedShare,
    key1: KeyStream,
    key2: KeyStream,
}

impl CipherBundle {
    /// Validates the structural invariants: plane indices line up, key sizes
    /// match their planes, both shares are ciphertext for the same message
    /// length.
    pub fn new(
        share1: EncryptedShare,
        share2: EncryptedShare,
        key1: KeyStream,
        key2: KeyStream,
    ) -> Result<CipherBundle> {
        if share1.plane_index() != PlaneIndex::One || share2.plane_index() != PlaneIndex::Two {
            return Err(Error::InvalidBundle("share plane indices out of order".into()));
        }
        if key1.plane_index() != PlaneIndex::One || key2.plane_index() != PlaneIndex::Two {
            return Err(Error::InvalidBundle("key plane indices out of order".into()));
        }
        if !share1.is_encrypted() || !share2.is_encrypted() {
            return Err(Error::InvalidBundle("shares are not ciphertext".into()));
        }
        if share1.msg_len() != share2.msg_len() {
            return Err(Error::InvalidBundle(format!(
                "shares disagree on message length: {} vs {}",
                share1.msg_len(),
                share2.msg_len()
            )));
        }
        if key1.len() != share1.bit_len() || key2.len() != share2.bit_len() {
            return Err(Error::InvalidBundle("key sizes do not match their planes".into()));
        }
        Ok(CipherBundle {
            share1,
            share2,
            key1,
            key2,
        })
    }

    pub fn share1(&self) -> &EncryptedShare {
        &self.share1
    }

    pub fn share2(&self) -> &EncryptedShare {
        &self.share2
    }

    pub fn key1(&self) -> &KeyStream {
        &self.key1
    }

    pub fn key2(&self) -> &KeyStream {
        &self.key2
    }

    pub fn msg_len(&self) -> usize {
        self.share1.msg_len()
    }

    pub fn into_parts(self) -> (EncryptedShare, EncryptedShare, KeyStream, KeyStream) {
        (self.share1, self.share2, self.key1, self.key2)
    }
}

/// XORs a plane with its keystream, toggling the ciphertext flag.
///
/// The key must match the plane in both size and plane index.
pub fn xor_plane(plane: &BitPlane, key: &KeyStream) -> Result<BitPlane> {
    if key.len() != plane.bit_len() {
        return Err(Error::KeySizeMismatch {
            key_bits: key.len(),
            plane_bits: plane.bit_len(),
        });
    }
    if key.plane_index() != plane.plane_index() {
        return Err(Error::WrongKey {
            key_plane: key.plane_index().as_u8(),
            share_plane: plane.plane_index().as_u8(),
        });
    }
    let bits: BitSeq = plane
        .bits()
        .iter()
        .zip(key.bits().iter())
        .map(|(p, k)| p ^ k)
        .collect();
    Ok(plane.with_bits(bits, !plane.is_encrypted()))
}

/// XORs an encrypted share back to its plaintext plane.
///
/// This is one layer of the two-phase hand-off: the result holds only the
/// odd- or even-positioned bits of the message stream, never the message.
pub fn decrypt_partial(share: &EncryptedShare, key: &KeyStream) -> Result<BitPlane> {
    xor_plane(share, key)
}

fn make_planes(message: &[u8]) -> Result<(BitPlane, BitPlane)> {
    let stream = bitcodec::encode_bits(message);
    let (odd, even) = bitcodec::split_odd_even(&stream)?;
    Ok((
        shape_plane(odd, PlaneIndex::One, message.len())?,
        shape_plane(even, PlaneIndex::Two, message.len())?,
    ))
}

/// Runs the full encryption pipeline with two fresh keystreams.
pub fn encrypt_message<R: RngCore + ?Sized>(message: &[u8], rng: &mut R) -> Result<CipherBundle> {
    let (plane1, plane2) = make_planes(message)?;
    let key1 = generate_key(plane1.bit_len(), PlaneIndex::One, rng)?;
    let key2 = generate_key(plane2.bit_len(), PlaneIndex::Two, rng)?;
    CipherBundle::new(
        xor_plane(&plane1, &key1)?,
        xor_plane(&plane2, &key2)?,
        key1,
        key2,
    )
}

/// Encryption with caller-supplied keystreams, sized exactly to the planes.
///
/// This is the seam that reproduces a known encryption bit for bit; the
/// normal path is [`encrypt_message`], which always draws fresh keys.
pub fn encrypt_message_with_keys(
    message: &[u8],
    key1: KeyStream,
    key2: KeyStream,
) -> Result<CipherBundle> {
    let (plane1, plane2) = make_planes(message)?;
    CipherBundle::new(
        xor_plane(&plane1, &key1)?,
        xor_plane(&plane2, &key2)?,
        key1,
        key2,
    )
}

/// Decrypts both shares, merges the planes, and decodes the message.
pub fn decrypt_message(bundle: &CipherBundle) -> Result<Vec<u8>> {
    let plane1 = decrypt_partial(&bundle.share1, &bundle.key1)?;
    let plane2 = decrypt_partial(&bundle.share2, &bundle.key2)?;
    merge_planes(&plane1, &plane2)
}

/// Merges two decrypted planes back into the message bytes.
pub fn merge_planes(plane1: &BitPlane, plane2: &BitPlane) -> Result<Vec<u8>> {
    let merged = bitcodec::merge_odd_even(&flatten_plane(plane1), &flatten_plane(plane2))?;
    bitcodec::decode_bits(&merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits;
    use crate::keystream::default_rng;
    use proptest::collection::vec;
    use proptest::prelude::*;

    fn reference_keys() -> (KeyStream, KeyStream) {
        (
            KeyStream::new(bits![1, 1, 1, 0], PlaneIndex::One),
            KeyStream::new(bits![0, 0, 0, 1], PlaneIndex::Two),
        )
    }

    #[test]
    fn xor_matches_the_reference_tables() {
        let i1 = shape_plane(bits![1, 0, 0, 1], PlaneIndex::One, 1).unwrap();
        let i2 = shape_plane(bits![0, 0, 1, 0], PlaneIndex::Two, 1).unwrap();
        let (k1, k2) = reference_keys();

        let e1 = xor_plane(&i1, &k1).unwrap();
        assert_eq!(e1.bits(), &bits![0, 1, 1, 1]);
        assert!(e1.is_encrypted());

        let e2 = xor_plane(&i2, &k2).unwrap();
        assert_eq!(e2.bits(), &bits![0, 0, 1, 1]);

        let d1 = xor_plane(&e1, &k1).unwrap();
        assert_eq!(d1.bits(), &bits![1, 0, 0, 1]);
        assert!(!d1.is_encrypted());
    }

    #[test]
    fn zero_key_only_toggles_the_flag() {
        let plane = shape_plane(bits![1, 0, 0, 1], PlaneIndex::One, 1).unwrap();
        let key = KeyStream::new(BitSeq::zeros(4), PlaneIndex::One);
        let out = xor_plane(&plane, &key).unwrap();
        assert_eq!(out.bits(), plane.bits());
        assert!(out.is_encrypted());
    }

    #[test]
    fn mismatched_key_sizes_are_rejected() {
        let plane = shape_plane(bits![1, 0, 0, 1], PlaneIndex::One, 1).unwrap();
        let key = KeyStream::new(BitSeq::zeros(5), PlaneIndex::One);
        assert!(matches!(
            xor_plane(&plane, &key),
            Err(Error::KeySizeMismatch {
                key_bits: 5,
                plane_bits: 4
            })
        ));
    }

    #[test]
    fn cross_plane_keys_are_rejected() {
        let plane = shape_plane(bits![1, 0, 0, 1], PlaneIndex::One, 1).unwrap();
        let key = KeyStream::new(BitSeq::zeros(4), PlaneIndex::Two);
        assert!(matches!(
            xor_plane(&plane, &key),
            Err(Error::WrongKey {
                key_plane: 2,
                share_plane: 1
            })
        ));
    }

    #[test]
    fn reference_message_encrypts_to_the_reference_shares() {
        let (k1, k2) = reference_keys();
        let bundle = encrypt_message_with_keys(b"a", k1, k2).unwrap();
        assert_eq!(bundle.share1().bits(), &bits![0, 1, 1, 1]);
        assert_eq!(bundle.share2().bits(), &bits![0, 0, 1, 1]);
        assert_eq!(decrypt_message(&bundle).unwrap(), b"a");
    }

    #[test]
    fn partial_decryption_reveals_one_plane_only() {
        let (k1, k2) = reference_keys();
        let bundle = encrypt_message_with_keys(b"a", k1, k2).unwrap();

        let plane1 = decrypt_partial(bundle.share1(), bundle.key1()).unwrap();
        assert_eq!(plane1.bits(), &bits![1, 0, 0, 1]);
        let plane2 = decrypt_partial(bundle.share2(), bundle.key2()).unwrap();
        assert_eq!(plane2.bits(), &bits![0, 0, 1, 0]);

        // One plane holds exactly the odd-positioned half of the stream;
        // nothing in this crate turns a single plane into a message.
        let (odd, _) = bitcodec::split_odd_even(&bitcodec::encode_bits(b"a")).unwrap();
        assert_eq!(flatten_plane(&plane1), odd);
    }

    #[test]
    fn empty_message_yields_empty_artifacts() {
        let bundle = encrypt_message(b"", &mut default_rng()).unwrap();
        assert_eq!(bundle.share1().bit_len(), 0);
        assert_eq!(bundle.share2().bit_len(), 0);
        assert!(bundle.key1().is_empty());
        assert!(bundle.key2().is_empty());
        assert_eq!(decrypt_message(&bundle).unwrap(), b"");
    }

    #[test]
    fn ciphertext_differs_from_plaintext() {
        let mut rng = default_rng();
        for _ in 0..100 {
            let mut msg = vec![0u8; 16];
            rand::RngCore::fill_bytes(&mut rng, &mut msg);
            let bundle = encrypt_message(&msg, &mut rng).unwrap();
            let (plane1, _) = make_planes(&msg).unwrap();
            assert_ne!(bundle.share1().bits(), plane1.bits());
        }
    }

    #[test]
    fn keys_are_independent_draws() {
        let bundle = encrypt_message(&[0xAB; 2500], &mut default_rng()).unwrap();
        let agree = bundle
            .key1()
            .bits()
            .iter()
            .zip(bundle.key2().bits().iter())
            .filter(|(a, b)| a == b)
            .count();
        let total = bundle.key1().len();
        assert!(total >= 10_000);
        assert!(
            (agree as f64) < 0.55 * total as f64,
            "keys agree on {agree} of {total} positions"
        );
    }

    #[test]
    fn bundles_enforce_their_invariants() {
        let (k1, k2) = reference_keys();
        let bundle = encrypt_message_with_keys(b"a", k1.clone(), k2.clone()).unwrap();

        // Swapped shares put plane 2 first.
        assert!(matches!(
            CipherBundle::new(
                bundle.share2().clone(),
                bundle.share1().clone(),
                k1.clone(),
                k2.clone()
            ),
            Err(Error::InvalidBundle(_))
        ));

        // Plaintext planes are not shares.
        let plain = shape_plane(bits![1, 0, 0, 1], PlaneIndex::One, 1).unwrap();
        assert!(matches!(
            CipherBundle::new(plain, bundle.share2().clone(), k1, k2),
            Err(Error::InvalidBundle(_))
        ));
    }

    proptest! {
        #[test]
        fn double_xor_is_identity(raw in vec(any::<bool>(), 0..256), keybits in vec(any::<bool>(), 0..256)) {
            let mut raw = raw;
            raw.truncate(raw.len() & !3);
            let msg_len = raw.len() / 4;
            let plane = shape_plane(BitSeq::from_bools(raw), PlaneIndex::One, msg_len).unwrap();
            prop_assume!(keybits.len() >= plane.bit_len());
            let key = KeyStream::new(BitSeq::from_bools(keybits[..plane.bit_len()].to_vec()), PlaneIndex::One);
            let once = xor_plane(&plane, &key).unwrap();
            let twice = xor_plane(&once, &key).unwrap();
            prop_assert_eq!(twice, plane);
        }

        #[test]
        fn decrypt_inverts_encrypt(msg in vec(any::<u8>(), 0..2048)) {
            let bundle = encrypt_message(&msg, &mut default_rng()).unwrap();
            prop_assert_eq!(decrypt_message(&bundle).unwrap(), msg);
        }

        #[test]
        fn both_planes_share_their_geometry(msg in vec(any::<u8>(), 0..512)) {
            let (plane1, plane2) = make_planes(&msg).unwrap();
            prop_assert_eq!(plane1.width(), plane2.width());
            prop_assert_eq!(plane1.height(), plane2.height());
            prop_assert_eq!(plane1.msg_len(), plane2.msg_len());
            prop_assert_eq!(plane1.bit_len(), plane2.bit_len());
        }
    }
}
