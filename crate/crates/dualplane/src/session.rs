//! The acknowledgement-gated two-phase transfer: wire frames, sender and
//! receiver state machines, and blocking drivers.
//!
//! The sender opens with HELLO and LAYER1 (the plane-1 share and its key),
//! then waits. The receiver decrypts that layer, holds the partial plane,
//! and answers ACK1. Only then does the sender release LAYER2; the receiver
//! decrypts it, merges the planes into the message, and answers DONE.
//! Neither side ever holds a decryptable whole until both layers have
//! crossed, so an observer who misses one phase learns only alternate bit
//! positions.
//!
//! # Wire format
//!
//! Each frame is a length-prefixed record:
//!
//! ```text
//! +-------+---------+------+-------------+------------------+
//! | magic | version | type | payload_len | payload          |
//! | DPW1  | 0x01    | u8   | u32 BE      | payload_len bytes|
//! +-------+---------+------+-------------+------------------+
//! ```
//!
//! Types: 0x01 HELLO, 0x02 LAYER1, 0x03 ACK1, 0x04 LAYER2, 0x05 DONE,
//! 0x7F ERROR. A LAYER payload is one DPS1 share record immediately followed
//! by one DPK1 key record; an ERROR payload is a UTF-8 reason. Payloads
//! above 16 MiB are rejected before allocation.
//!
//! The state machines never touch a socket: they consume frames and produce
//! frames, so the same logic runs over in-memory channels in tests and over
//! TCP in the CLI. Sessions are single-attempt: the first out-of-order
//! frame draws an ERROR reply and both ends close.

use std::io::{Read, Write};

use crate::cipher::{decrypt_partial, merge_planes, CipherBundle};
use crate::error::{Error, Result};
use crate::keystream::{read_key, write_key, KeyStream};
use crate::shares::{read_share, write_share, BitPlane, PlaneIndex};

pub const FRAME_MAGIC: [u8; 4] = *b"DPW1";
pub const FRAME_VERSION: u8 = 0x01;
pub const FRAME_HEADER_LEN: usize = 10;
/// Payload cap; a declared length above this is rejected before any
/// allocation happens.
pub const MAX_PAYLOAD_LEN: u32 = 16 * 1024 * 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameType {
    Hello = 0x01,
    Layer1 = 0x02,
    Ack1 = 0x03,
    Layer2 = 0x04,
    Done = 0x05,
    Error = 0x7F,
}

impl FrameType {
    pub fn as_u8(self) -> u8 {
        self as u8
    }

    pub fn from_u8(value: u8) -> Option<FrameType> {
        match value {
            0x01 => Some(FrameType::Hello),
            0x02 => Some(FrameType::Layer1),
            0x03 => Some(FrameType::Ack1),
            0x04 => Some(FrameType::Layer2),
            0x05 => Some(FrameType::Done),
            0x7F => Some(FrameType::Error),
            _ => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            FrameType::Hello => "HELLO",
            FrameType::Layer1 => "LAYER1",
            FrameType::Ack1 => "ACK1",
            FrameType::Layer2 => "LAYER2",
            FrameType::Done => "DONE",
            FrameType::Error => "ERROR",
        }
    }
}

/// One DPW1 wire frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub frame_type: FrameType,
    pub payload: Vec<u8>,
}

impl Frame {
    pub fn hello() -> Frame {
        Frame {
            frame_type: FrameType::Hello,
            payload: Vec::new(),
        }
    }

    pub fn ack1() -> Frame {
        Frame {
            frame_type: FrameType::Ack1,
            payload: Vec::new(),
        }
    }

    pub fn done() -> Frame {
        Frame {
            frame_type: FrameType::Done,
            payload: Vec::new(),
        }
    }

    pub fn error(reason: &str) -> Frame {
        Frame {
            frame_type: FrameType::Error,
            payload: reason.as_bytes().to_vec(),
        }
    }

    /// Builds a LAYER frame carrying a share and its key; the frame type
    /// follows the share's plane index.
    pub fn layer(share: &BitPlane, key: &KeyStream) -> Result<Frame> {
        let frame_type = match share.plane_index() {
            PlaneIndex::One => FrameType::Layer1,
            PlaneIndex::Two => FrameType::Layer2,
        };
        let mut payload = Vec::new();
        write_share(share, &mut payload)?;
        write_key(key, &mut payload)?;
        if payload.len() > MAX_PAYLOAD_LEN as usize {
            return Err(Error::OversizeFrame(u32::try_from(payload.len()).unwrap_or(u32::MAX)));
        }
        Ok(Frame {
            frame_type,
            payload,
        })
    }

    /// Parses a LAYER payload back into its share and key.
    pub fn decode_layer(&self) -> Result<(BitPlane, KeyStream)> {
        let mut cursor = self.payload.as_slice();
        let share = read_share(&mut cursor)?;
        let key = read_key(&mut cursor)?;
        if !cursor.is_empty() {
            return Err(Error::CorruptShare(format!(
                "{} trailing bytes after layer payload",
                cursor.len()
            )));
        }
        Ok((share, key))
    }

    /// The reason text of an ERROR frame.
    pub fn error_reason(&self) -> String {
        String::from_utf8_lossy(&self.payload).into_owned()
    }
}

/// Serializes a frame to its wire bytes.
pub fn frame_encode(frame: &Frame) -> Vec<u8> {
    let mut out = Vec::with_capacity(FRAME_HEADER_LEN + frame.payload.len());
    out.extend_from_slice(&FRAME_MAGIC);
    out.push(FRAME_VERSION);
    out.push(frame.frame_type.as_u8());
    out.extend_from_slice(&(frame.payload.len() as u32).to_be_bytes());
    out.extend_from_slice(&frame.payload);
    out
}

fn parse_header(header: &[u8; FRAME_HEADER_LEN]) -> Result<(FrameType, u32)> {
    let magic: [u8; 4] = header[..4].try_into().unwrap();
    if magic != FRAME_MAGIC {
        return Err(Error::MalformedFrame(format!("bad magic {magic:02x?}")));
    }
    if header[4] != FRAME_VERSION {
        return Err(Error::MalformedFrame(format!(
            "unsupported version {:#04x}",
            header[4]
        )));
    }
    let frame_type = FrameType::from_u8(header[5])
        .ok_or_else(|| Error::MalformedFrame(format!("unknown frame type {:#04x}", header[5])))?;
    let payload_len = u32::from_be_bytes(header[6..10].try_into().unwrap());
    if payload_len > MAX_PAYLOAD_LEN {
        return Err(Error::OversizeFrame(payload_len));
    }
    Ok((frame_type, payload_len))
}

/// Parses exactly one frame from a byte slice.
pub fn frame_decode(bytes: &[u8]) -> Result<Frame> {
    if bytes.len() < FRAME_HEADER_LEN {
        return Err(Error::MalformedFrame(format!(
            "{} bytes is shorter than a frame header",
            bytes.len()
        )));
    }
    let header: [u8; FRAME_HEADER_LEN] = bytes[..FRAME_HEADER_LEN].try_into().unwrap();
    let (frame_type, payload_len) = parse_header(&header)?;
    let rest = &bytes[FRAME_HEADER_LEN..];
    if rest.len() != payload_len as usize {
        return Err(Error::MalformedFrame(format!(
            "payload length {} does not match declared {payload_len}",
            rest.len()
        )));
    }
    Ok(Frame {
        frame_type,
        payload: rest.to_vec(),
    })
}

/// Writes one frame to a byte stream.
pub fn write_frame<W: Write>(dest: &mut W, frame: &Frame) -> Result<()> {
    dest.write_all(&frame_encode(frame))?;
    dest.flush()?;
    Ok(())
}

/// Reads one frame from a byte stream, validating the header before
/// allocating the payload.
pub fn read_frame<R: Read>(source: &mut R) -> Result<Frame> {
    let mut header = [0u8; FRAME_HEADER_LEN];
    source.read_exact(&mut header)?;
    let (frame_type, payload_len) = parse_header(&header)?;
    let mut payload = vec![0u8; payload_len as usize];
    source.read_exact(&mut payload)?;
    Ok(Frame {
        frame_type,
        payload,
    })
}

/// Why a session closed without delivering.
#[derive(Debug, Clone)]
pub struct SessionFailure {
    /// True when the peer reported the error; false when this side detected
    /// it and sent the ERROR frame.
    pub remote: bool,
    pub reason: String,
}

impl SessionFailure {
    fn into_error(self) -> Error {
        if self.remote {
            Error::Remote(self.reason)
        } else {
            Error::ProtocolViolation(self.reason)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SenderPhase {
    Init,
    SentLayer1,
    SentLayer2,
    Closed,
}

/// Sender half of the two-phase transfer.
///
/// Phases move strictly forward: Init, SentLayer1 after start, SentLayer2
/// once ACK1 arrives, Closed on DONE or on any violation.
#[derive(Debug)]
pub struct SenderSession {
    phase: SenderPhase,
    bundle: CipherBundle,
    failure: Option<SessionFailure>,
}

impl SenderSession {
    /// Opens a session: returns the machine in SentLayer1 along with the
    /// HELLO and LAYER1 frames to put on the wire.
    pub fn start(bundle: CipherBundle) -> Result<(SenderSession, Vec<Frame>)> {
        let layer1 = Frame::layer(bundle.share1(), bundle.key1())?;
        let session = SenderSession {
            phase: SenderPhase::SentLayer1,
            bundle,
            failure: None,
        };
        Ok((session, vec![Frame::hello(), layer1]))
    }

    pub fn phase(&self) -> SenderPhase {
        self.phase
    }

    /// True once the session closed after a completed hand-off.
    pub fn succeeded(&self) -> bool {
        self.phase == SenderPhase::Closed && self.failure.is_none()
    }

    pub fn failure(&self) -> Option<&SessionFailure> {
        self.failure.as_ref()
    }

    /// Feeds one incoming frame; the returned frame, if any, goes on the
    /// wire. After Closed the machine emits nothing.
    pub fn on_frame(&mut self, frame: &Frame) -> Option<Frame> {
        match (self.phase, frame.frame_type) {
            (SenderPhase::Closed, _) => None,
            (_, FrameType::Error) => {
                self.failure = Some(SessionFailure {
                    remote: true,
                    reason: frame.error_reason(),
                });
                self.phase = SenderPhase::Closed;
                None
            }
            (SenderPhase::SentLayer1, FrameType::Ack1) => {
                match Frame::layer(self.bundle.share2(), self.bundle.key2()) {
                    Ok(layer2) => {
                        self.phase = SenderPhase::SentLayer2;
                        Some(layer2)
                    }
                    Err(e) => self.abort(e.to_string()),
                }
            }
            (SenderPhase::SentLayer2, FrameType::Done) => {
                self.phase = SenderPhase::Closed;
                None
            }
            (phase, frame_type) => self.abort(format!(
                "unexpected {} frame in phase {phase:?}",
                frame_type.name()
            )),
        }
    }

    fn abort(&mut self, reason: String) -> Option<Frame> {
        let frame = Frame::error(&reason);
        self.failure = Some(SessionFailure {
            remote: false,
            reason,
        });
        self.phase = SenderPhase::Closed;
        Some(frame)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReceiverPhase {
    #[default]
    Init,
    GotLayer1,
    GotLayer2,
    Closed,
}

/// Receiver half of the two-phase transfer.
///
/// The machine can only emit a message after processing LAYER1 strictly
/// before LAYER2; the plane-1 partial sits in `partial` between the two.
#[derive(Debug, Default)]
pub struct ReceiverSession {
    phase: ReceiverPhase,
    partial: Option<BitPlane>,
    failure: Option<SessionFailure>,
}

impl ReceiverSession {
    pub fn new() -> ReceiverSession {
        ReceiverSession::default()
    }

    pub fn phase(&self) -> ReceiverPhase {
        self.phase
    }

    /// The decrypted plane-1 partial, present from GotLayer1 on.
    pub fn partial(&self) -> Option<&BitPlane> {
        self.partial.as_ref()
    }

    pub fn failure(&self) -> Option<&SessionFailure> {
        self.failure.as_ref()
    }

    /// Feeds one incoming frame. Returns the reply to put on the wire, if
    /// any, and the recovered message once LAYER2 has been processed.
    pub fn on_frame(&mut self, frame: &Frame) -> (Option<Frame>, Option<Vec<u8>>) {
        match (self.phase, frame.frame_type) {
            (ReceiverPhase::Closed, _) => (None, None),
            (_, FrameType::Error) => {
                self.failure = Some(SessionFailure {
                    remote: true,
                    reason: frame.error_reason(),
                });
                self.phase = ReceiverPhase::Closed;
                (None, None)
            }
            (ReceiverPhase::Init, FrameType::Hello) => (None, None),
            (ReceiverPhase::Init, FrameType::Layer1) => match self.accept_layer1(frame) {
                Ok(()) => {
                    self.phase = ReceiverPhase::GotLayer1;
                    (Some(Frame::ack1()), None)
                }
                Err(e) => (self.abort(e.to_string()), None),
            },
            (ReceiverPhase::GotLayer1, FrameType::Layer2) => match self.accept_layer2(frame) {
                Ok(message) => {
                    self.phase = ReceiverPhase::GotLayer2;
                    (Some(Frame::done()), Some(message))
                }
                Err(e) => (self.abort(e.to_string()), None),
            },
            (phase, frame_type) => (
                self.abort(format!(
                    "unexpected {} frame in phase {phase:?}",
                    frame_type.name()
                )),
                None,
            ),
        }
    }

    fn accept_layer1(&mut self, frame: &Frame) -> Result<()> {
        let (share, key) = frame.decode_layer()?;
        if share.plane_index() != PlaneIndex::One {
            return Err(Error::ProtocolViolation(
                "LAYER1 payload carries the wrong plane".into(),
            ));
        }
        self.partial = Some(decrypt_partial(&share, &key)?);
        Ok(())
    }

    fn accept_layer2(&mut self, frame: &Frame) -> Result<Vec<u8>> {
        let (share, key) = frame.decode_layer()?;
        if share.plane_index() != PlaneIndex::Two {
            return Err(Error::ProtocolViolation(
                "LAYER2 payload carries the wrong plane".into(),
            ));
        }
        let plane2 = decrypt_partial(&share, &key)?;
        let plane1 = self.partial.as_ref().expect("GotLayer1 holds a partial");
        merge_planes(plane1, &plane2)
    }

    fn abort(&mut self, reason: String) -> Option<Frame> {
        let frame = Frame::error(&reason);
        self.failure = Some(SessionFailure {
            remote: false,
            reason,
        });
        self.phase = ReceiverPhase::Closed;
        Some(frame)
    }
}

/// Runs a complete sender session over a byte stream.
pub fn drive_sender<S: Read + Write>(stream: &mut S, bundle: CipherBundle) -> Result<()> {
    let (mut session, frames) = SenderSession::start(bundle)?;
    for frame in &frames {
        write_frame(stream, frame)?;
    }
    while session.phase() != SenderPhase::Closed {
        let frame = read_frame(stream)?;
        if let Some(reply) = session.on_frame(&frame) {
            write_frame(stream, &reply)?;
        }
    }
    match session.failure {
        None => Ok(()),
        Some(failure) => Err(failure.into_error()),
    }
}

/// Runs a complete receiver session over a byte stream, returning the
/// recovered message. The connection is done once this returns.
pub fn drive_receiver<S: Read + Write>(stream: &mut S) -> Result<Vec<u8>> {
    let mut session = ReceiverSession::new();
    loop {
        let frame = read_frame(stream)?;
        let (reply, message) = session.on_frame(&frame);
        if let Some(reply) = &reply {
            write_frame(stream, reply)?;
        }
        if let Some(message) = message {
            return Ok(message);
        }
        if session.phase() == ReceiverPhase::Closed {
            return Err(match session.failure.take() {
                Some(failure) => failure.into_error(),
                None => Error::ProtocolViolation("session closed without a message".into()),
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits;
    use crate::cipher::encrypt_message_with_keys;
    use proptest::collection::vec;
    use proptest::prelude::*;

    pub(crate) fn reference_bundle() -> CipherBundle {
        encrypt_message_with_keys(
            b"a",
            KeyStream::new(bits![1, 1, 1, 0], PlaneIndex::One),
            KeyStream::new(bits![0, 0, 0, 1], PlaneIndex::Two),
        )
        .unwrap()
    }

    #[test]
    fn ack1_is_ten_known_bytes() {
        let encoded = frame_encode(&Frame::ack1());
        assert_eq!(encoded, [0x44, 0x50, 0x57, 0x31, 0x01, 0x03, 0x00, 0x00, 0x00, 0x00]);
        assert_eq!(frame_decode(&encoded).unwrap(), Frame::ack1());
    }

    #[test]
    fn decode_validates_magic_version_and_type() {
        let mut bytes = frame_encode(&Frame::ack1());
        bytes[0] = b'X';
        assert!(matches!(frame_decode(&bytes), Err(Error::MalformedFrame(_))));

        let mut bytes = frame_encode(&Frame::ack1());
        bytes[4] = 0x02;
        assert!(matches!(frame_decode(&bytes), Err(Error::MalformedFrame(_))));

        let mut bytes = frame_encode(&Frame::ack1());
        bytes[5] = 0x42;
        assert!(matches!(frame_decode(&bytes), Err(Error::MalformedFrame(_))));
    }

    #[test]
    fn decode_rejects_truncation_and_trailing_bytes() {
        let bytes = frame_encode(&Frame::error("boom"));
        assert!(matches!(frame_decode(&bytes[..5]), Err(Error::MalformedFrame(_))));
        assert!(matches!(
            frame_decode(&bytes[..bytes.len() - 1]),
            Err(Error::MalformedFrame(_))
        ));
        let mut longer = bytes.clone();
        longer.push(0);
        assert!(matches!(frame_decode(&longer), Err(Error::MalformedFrame(_))));
    }

    #[test]
    fn oversize_declared_length_is_rejected_from_the_header() {
        let mut header = frame_encode(&Frame::hello());
        header[6..10].copy_from_slice(&(MAX_PAYLOAD_LEN + 1).to_be_bytes());
        assert!(matches!(
            frame_decode(&header),
            Err(Error::OversizeFrame(len)) if len == MAX_PAYLOAD_LEN + 1
        ));
        assert!(matches!(
            read_frame(&mut header.as_slice()),
            Err(Error::OversizeFrame(_))
        ));
    }

    #[test]
    fn layer_payload_round_trips() {
        let bundle = reference_bundle();
        let frame = Frame::layer(bundle.share1(), bundle.key1()).unwrap();
        assert_eq!(frame.frame_type, FrameType::Layer1);
        let (share, key) = frame.decode_layer().unwrap();
        assert_eq!(&share, bundle.share1());
        assert_eq!(&key, bundle.key1());
    }

    #[test]
    fn start_emits_hello_then_layer1() {
        let (session, frames) = SenderSession::start(reference_bundle()).unwrap();
        assert_eq!(session.phase(), SenderPhase::SentLayer1);
        assert_eq!(frames.len(), 2);
        assert_eq!(frames[0], Frame::hello());
        let (share, key) = frames[1].decode_layer().unwrap();
        assert_eq!(share.bits(), &bits![0, 1, 1, 1]);
        assert_eq!(key.bits(), &bits![1, 1, 1, 0]);
    }

    #[test]
    fn start_handles_the_empty_bundle() {
        let bundle = encrypt_message_with_keys(
            b"",
            KeyStream::new(crate::bitcodec::BitSeq::new(), PlaneIndex::One),
            KeyStream::new(crate::bitcodec::BitSeq::new(), PlaneIndex::Two),
        )
        .unwrap();
        let (_, frames) = SenderSession::start(bundle).unwrap();
        let (share, _) = frames[1].decode_layer().unwrap();
        assert_eq!(share.bit_len(), 0);
    }

    #[test]
    fn ack_releases_layer2() {
        let (mut session, _) = SenderSession::start(reference_bundle()).unwrap();
        let layer2 = session.on_frame(&Frame::ack1()).unwrap();
        assert_eq!(layer2.frame_type, FrameType::Layer2);
        let (share, key) = layer2.decode_layer().unwrap();
        assert_eq!(share.bits(), &bits![0, 0, 1, 1]);
        assert_eq!(key.bits(), &bits![0, 0, 0, 1]);
        assert_eq!(session.phase(), SenderPhase::SentLayer2);

        assert_eq!(session.on_frame(&Frame::done()), None);
        assert!(session.succeeded());
    }

    #[test]
    fn early_done_aborts_the_sender() {
        let (mut session, _) = SenderSession::start(reference_bundle()).unwrap();
        let reply = session.on_frame(&Frame::done()).unwrap();
        assert_eq!(reply.frame_type, FrameType::Error);
        assert_eq!(session.phase(), SenderPhase::Closed);
        assert!(!session.succeeded());
        // Closed machines emit nothing further.
        assert_eq!(session.on_frame(&Frame::ack1()), None);
    }

    #[test]
    fn receiver_recovers_the_reference_message() {
        let (mut sender, frames) = SenderSession::start(reference_bundle()).unwrap();
        let mut receiver = ReceiverSession::new();

        assert_eq!(receiver.on_frame(&frames[0]), (None, None));
        let (ack, none) = receiver.on_frame(&frames[1]);
        assert_eq!(none, None);
        assert_eq!(receiver.phase(), ReceiverPhase::GotLayer1);
        assert_eq!(receiver.partial().unwrap().bits(), &bits![1, 0, 0, 1]);

        let layer2 = sender.on_frame(&ack.unwrap()).unwrap();
        let (done, message) = receiver.on_frame(&layer2);
        assert_eq!(message.unwrap(), b"a");
        assert_eq!(receiver.phase(), ReceiverPhase::GotLayer2);

        assert_eq!(sender.on_frame(&done.unwrap()), None);
        assert!(sender.succeeded());
    }

    #[test]
    fn layer2_first_is_a_violation() {
        let (_, frames) = SenderSession::start(reference_bundle()).unwrap();
        let (mut sender2, _) = SenderSession::start(reference_bundle()).unwrap();
        let layer2 = sender2.on_frame(&Frame::ack1()).unwrap();

        let mut receiver = ReceiverSession::new();
        receiver.on_frame(&frames[0]);
        let (reply, message) = receiver.on_frame(&layer2);
        assert_eq!(reply.unwrap().frame_type, FrameType::Error);
        assert_eq!(message, None);
        assert_eq!(receiver.phase(), ReceiverPhase::Closed);
    }

    #[test]
    fn corrupt_layer_payload_draws_a_corrupt_share_error() {
        let (_, frames) = SenderSession::start(reference_bundle()).unwrap();
        let mut corrupt = frames[1].clone();
        corrupt.payload.truncate(corrupt.payload.len() - 1);

        let mut receiver = ReceiverSession::new();
        let (reply, message) = receiver.on_frame(&corrupt);
        let reply = reply.unwrap();
        assert_eq!(reply.frame_type, FrameType::Error);
        assert!(reply.error_reason().contains("truncated"));
        assert_eq!(message, None);
        assert_eq!(receiver.phase(), ReceiverPhase::Closed);
        assert!(receiver.partial().is_none());
    }

    #[test]
    fn mismatched_key_draws_a_wrong_key_error() {
        let bundle = reference_bundle();
        let short_key = KeyStream::new(bits![1, 1], PlaneIndex::One);
        let mut payload = Vec::new();
        write_share(bundle.share1(), &mut payload).unwrap();
        write_key(&short_key, &mut payload).unwrap();
        let frame = Frame {
            frame_type: FrameType::Layer1,
            payload,
        };

        let mut receiver = ReceiverSession::new();
        let (reply, _) = receiver.on_frame(&frame);
        assert!(reply.unwrap().error_reason().contains("key size mismatch"));
    }

    #[test]
    fn error_frames_close_both_machines_silently() {
        let (mut sender, _) = SenderSession::start(reference_bundle()).unwrap();
        assert_eq!(sender.on_frame(&Frame::error("peer says no")), None);
        assert_eq!(sender.phase(), SenderPhase::Closed);
        assert_eq!(sender.failure().unwrap().reason, "peer says no");
        assert!(sender.failure().unwrap().remote);

        let mut receiver = ReceiverSession::new();
        assert_eq!(receiver.on_frame(&Frame::error("gone")), (None, None));
        assert_eq!(receiver.phase(), ReceiverPhase::Closed);
    }

    proptest! {
        #[test]
        fn frame_codec_round_trips(type_idx in 0usize..6, payload in vec(any::<u8>(), 0..512)) {
            let frame_type = [
                FrameType::Hello,
                FrameType::Layer1,
                FrameType::Ack1,
                FrameType::Layer2,
                FrameType::Done,
                FrameType::Error,
            ][type_idx];
            let frame = Frame { frame_type, payload };
            prop_assert_eq!(frame_decode(&frame_encode(&frame)).unwrap(), frame);
        }
    }
}
