//! Command-line front end for the dualplane cryptosystem.
//!
//! `encrypt` and `decrypt` work on files: encryption writes the two share
//! and two key artifacts, decryption reads all four back. `send` and `recv`
//! run the two-phase transfer over TCP. `inspect` and `export-bitmap` poke
//! at individual artifacts.
//!
//! Exit codes: 0 success, 2 unreadable input or unreachable peer, 3
//! unwritable output, 4 wrong key, 5 corrupt artifact, 6 timeout, 7
//! protocol violation. Every failure prints a one-line diagnostic to
//! stderr; success paths keep stderr silent.

use std::fs;
use std::io::ErrorKind;
use std::net::{TcpListener, TcpStream};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{ArgAction, Parser, Subcommand};
use dualplane::keystream::{self, read_key, write_key};
use dualplane::session::{drive_receiver, drive_sender};
use dualplane::shares::{export_bitmap, read_share, write_share, PlaneIndex};
use dualplane::{decrypt_message, encrypt_message, CipherBundle, Error};

#[derive(Parser)]
#[command(name = "dualplane", version, about = "Dual bit-plane XOR cryptosystem")]
struct Cli {
    /// Print extra progress detail to stdout.
    #[arg(short, long, action = ArgAction::Count, global = true)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encrypt a file into two share files and two key files.
    Encrypt {
        /// File to encrypt.
        #[arg(long = "in")]
        input: PathBuf,
        /// Directory receiving share1.dps, share2.dps, key1.dpk, key2.dpk.
        #[arg(long)]
        out_dir: PathBuf,
        /// Deterministic keystream seed; testing only, requires
        /// --insecure-deterministic.
        #[arg(long, requires = "insecure_deterministic")]
        seed: Option<u64>,
        /// Acknowledge that a seeded run is reproducible and therefore
        /// insecure.
        #[arg(long)]
        insecure_deterministic: bool,
    },
    /// Decrypt four artifact files back into the message.
    Decrypt {
        #[arg(long)]
        share1: PathBuf,
        #[arg(long)]
        key1: PathBuf,
        #[arg(long)]
        share2: PathBuf,
        #[arg(long)]
        key2: PathBuf,
        /// Where to write the recovered message.
        #[arg(long = "out")]
        output: PathBuf,
        /// Require the recovered message to be valid UTF-8.
        #[arg(long)]
        text: bool,
    },
    /// Encrypt a file and send it to a receiver over TCP.
    Send {
        #[arg(long)]
        host: String,
        #[arg(long)]
        port: u16,
        /// File to send.
        #[arg(long = "in")]
        input: PathBuf,
        /// Seconds of socket inactivity before the session aborts.
        #[arg(long, default_value_t = 30)]
        timeout_secs: u64,
    },
    /// Receive one message over TCP and write it to a file.
    Recv {
        /// Port to listen on.
        #[arg(long)]
        listen: u16,
        /// Where to write the recovered message.
        #[arg(long = "out")]
        output: PathBuf,
        /// Seconds to wait for a sender before giving up.
        #[arg(long, default_value_t = 30)]
        timeout_secs: u64,
        /// Serve connections one after another instead of exiting after the
        /// first session.
        #[arg(long)]
        keep_alive: bool,
        /// Require the recovered message to be valid UTF-8.
        #[arg(long)]
        text: bool,
    },
    /// Describe a share or key file.
    Inspect {
        /// Artifact to describe.
        path: PathBuf,
    },
    /// Export a share as a plain-text portable bitmap.
    ExportBitmap {
        /// Share file to export.
        path: PathBuf,
        /// Where to write the bitmap.
        #[arg(long = "out")]
        output: PathBuf,
    },
}

/// A diagnostic plus the process exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(context: &str, err: impl std::fmt::Display) -> Failure {
        Failure {
            code: 2,
            message: format!("{context}: {err}"),
        }
    }

    fn output(context: &str, err: impl std::fmt::Display) -> Failure {
        Failure {
            code: 3,
            message: format!("{context}: {err}"),
        }
    }

    fn wrong_key(message: String) -> Failure {
        Failure { code: 4, message }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match &err {
            Error::WrongKey { .. } | Error::KeySizeMismatch { .. } => 4,
            Error::ProtocolViolation(_) | Error::Remote(_) => 7,
            Error::NothingToExport => 2,
            Error::Io(e) if is_timeout(e) => 6,
            _ => 5,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn is_timeout(err: &std::io::Error) -> bool {
    matches!(err.kind(), ErrorKind::TimedOut | ErrorKind::WouldBlock)
}

/// Session transport errors outrank the generic mapping: a dead or silent
/// peer is a timeout or a failed session, not a corrupt artifact.
fn session_failure(err: Error) -> Failure {
    match err {
        Error::Io(e) if is_timeout(&e) => Failure {
            code: 6,
            message: "session timed out".into(),
        },
        Error::Io(e) => Failure {
            code: 7,
            message: format!("session failed: {e}"),
        },
        other => Failure::from(other),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("dualplane: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Encrypt {
            input,
            out_dir,
            seed,
            insecure_deterministic: _,
        } => cmd_encrypt(&input, &out_dir, seed, cli.verbose),
        Command::Decrypt {
            share1,
            key1,
            share2,
            key2,
            output,
            text,
        } => cmd_decrypt(&share1, &key1, &share2, &key2, &output, text),
        Command::Send {
            host,
            port,
            input,
            timeout_secs,
        } => cmd_send(&host, port, &input, timeout_secs, cli.verbose),
        Command::Recv {
            listen,
            output,
            timeout_secs,
            keep_alive,
            text,
        } => cmd_recv(listen, &output, timeout_secs, keep_alive, text, cli.verbose),
        Command::Inspect { path } => cmd_inspect(&path),
        Command::ExportBitmap { path, output } => cmd_export_bitmap(&path, &output),
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::input(&format!("cannot read {}", path.display()), e))
}

fn write_output(path: &Path, data: &[u8]) -> Result<(), Failure> {
    fs::write(path, data).map_err(|e| Failure::output(&format!("cannot write {}", path.display()), e))
}

fn cmd_encrypt(input: &Path, out_dir: &Path, seed: Option<u64>, verbose: u8) -> Result<(), Failure> {
    let message = read_input(input)?;
    let mut rng = keystream::rng_from_seed(seed);
    let bundle = encrypt_message(&message, &mut *rng)?;

    fs::create_dir_all(out_dir)
        .map_err(|e| Failure::output(&format!("cannot create {}", out_dir.display()), e))?;

    let artifact = |name: &str, payload: Vec<u8>| -> Result<(), Failure> {
        write_output(&out_dir.join(name), &payload)
    };

    let mut buf = Vec::new();
    write_share(bundle.share1(), &mut buf)?;
    artifact("share1.dps", std::mem::take(&mut buf))?;
    write_share(bundle.share2(), &mut buf)?;
    artifact("share2.dps", std::mem::take(&mut buf))?;
    write_key(bundle.key1(), &mut buf)?;
    artifact("key1.dpk", std::mem::take(&mut buf))?;
    write_key(bundle.key2(), &mut buf)?;
    artifact("key2.dpk", buf)?;

    println!(
        "share1 {}x{}",
        bundle.share1().width(),
        bundle.share1().height()
    );
    println!(
        "share2 {}x{}",
        bundle.share2().width(),
        bundle.share2().height()
    );
    if verbose > 0 {
        println!(
            "encrypted {} bytes into {}",
            message.len(),
            out_dir.display()
        );
    }
    Ok(())
}

fn load_share(path: &Path) -> Result<dualplane::BitPlane, Failure> {
    let bytes = read_input(path)?;
    Ok(read_share(&mut bytes.as_slice())?)
}

fn load_key(path: &Path) -> Result<dualplane::KeyStream, Failure> {
    let bytes = read_input(path)?;
    Ok(read_key(&mut bytes.as_slice())?)
}

fn cmd_decrypt(
    share1: &Path,
    key1: &Path,
    share2: &Path,
    key2: &Path,
    output: &Path,
    text: bool,
) -> Result<(), Failure> {
    let s1 = load_share(share1)?;
    let k1 = load_key(key1)?;
    let s2 = load_share(share2)?;
    let k2 = load_key(key2)?;

    for (what, index, expected) in [
        ("share1", s1.plane_index(), PlaneIndex::One),
        ("key1", k1.plane_index(), PlaneIndex::One),
        ("share2", s2.plane_index(), PlaneIndex::Two),
        ("key2", k2.plane_index(), PlaneIndex::Two),
    ] {
        if index != expected {
            return Err(Failure::wrong_key(format!(
                "wrong key: {what} is for plane {index}, expected plane {expected}"
            )));
        }
    }

    let bundle = CipherBundle::new(s1, s2, k1, k2)?;
    let message = decrypt_message(&bundle)?;
    if text && std::str::from_utf8(&message).is_err() {
        return Err(Failure {
            code: 5,
            message: "decrypted message is not valid UTF-8".into(),
        });
    }
    write_output(output, &message)
}

fn cmd_send(host: &str, port: u16, input: &Path, timeout_secs: u64, verbose: u8) -> Result<(), Failure> {
    let message = read_input(input)?;
    let bundle = encrypt_message(&message, &mut keystream::default_rng())?;

    let mut stream = TcpStream::connect((host, port))
        .map_err(|e| Failure::input(&format!("cannot connect to {host}:{port}"), e))?;
    configure_stream(&stream, timeout_secs)?;

    drive_sender(&mut stream, bundle).map_err(session_failure)?;
    if verbose > 0 {
        println!("sent {} bytes to {host}:{port}", message.len());
    }
    Ok(())
}

fn cmd_recv(
    listen: u16,
    output: &Path,
    timeout_secs: u64,
    keep_alive: bool,
    text: bool,
    verbose: u8,
) -> Result<(), Failure> {
    let listener = TcpListener::bind(("0.0.0.0", listen))
        .map_err(|e| Failure::input(&format!("cannot listen on port {listen}"), e))?;
    listener
        .set_nonblocking(true)
        .map_err(|e| Failure::input("cannot configure listener", e))?;

    loop {
        let mut stream = accept_with_deadline(&listener, timeout_secs)?;
        configure_stream(&stream, timeout_secs)?;

        let message = drive_receiver(&mut stream).map_err(session_failure)?;
        if text && std::str::from_utf8(&message).is_err() {
            return Err(Failure {
                code: 5,
                message: "received message is not valid UTF-8".into(),
            });
        }
        write_output(output, &message)?;
        if verbose > 0 {
            println!("received {} bytes into {}", message.len(), output.display());
        }
        if !keep_alive {
            return Ok(());
        }
    }
}

fn accept_with_deadline(listener: &TcpListener, timeout_secs: u64) -> Result<TcpStream, Failure> {
    let deadline = Instant::now() + Duration::from_secs(timeout_secs);
    loop {
        match listener.accept() {
            Ok((stream, _)) => {
                stream
                    .set_nonblocking(false)
                    .map_err(|e| Failure::input("cannot configure connection", e))?;
                return Ok(stream);
            }
            Err(e) if e.kind() == ErrorKind::WouldBlock => {
                if Instant::now() >= deadline {
                    return Err(Failure {
                        code: 6,
                        message: "timed out waiting for a sender".into(),
                    });
                }
                std::thread::sleep(Duration::from_millis(25));
            }
            Err(e) => return Err(Failure::input("accept failed", e)),
        }
    }
}

fn configure_stream(stream: &TcpStream, timeout_secs: u64) -> Result<(), Failure> {
    let timeout = Some(Duration::from_secs(timeout_secs.max(1)));
    stream
        .set_read_timeout(timeout)
        .and_then(|()| stream.set_write_timeout(timeout))
        .map_err(|e| Failure::input("cannot configure connection", e))
}

fn cmd_inspect(path: &Path) -> Result<(), Failure> {
    let bytes = read_input(path)?;
    match bytes.get(..4) {
        Some(magic) if magic == dualplane::shares::SHARE_MAGIC => {
            let share = read_share(&mut bytes.as_slice())?;
            println!(
                "plane={} {}x{} msg_len={} encrypted={}",
                share.plane_index(),
                share.width(),
                share.height(),
                share.msg_len(),
                if share.is_encrypted() { "yes" } else { "no" }
            );
            Ok(())
        }
        Some(magic) if magic == dualplane::keystream::KEY_MAGIC => {
            let key = read_key(&mut bytes.as_slice())?;
            println!("key plane={} bits={}", key.plane_index(), key.len());
            Ok(())
        }
        _ => Err(Failure {
            code: 5,
            message: format!("{}: unknown magic, not a dualplane artifact", path.display()),
        }),
    }
}

fn cmd_export_bitmap(path: &Path, output: &Path) -> Result<(), Failure> {
    let share = load_share(path)?;
    let mut bitmap = Vec::new();
    export_bitmap(&share, &mut bitmap)?;
    write_output(output, &bitmap)
}
