use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use dualplane::bitcodec::{encode_bits, merge_odd_even, split_odd_even};
use dualplane::{decrypt_message, encrypt_message};
use dualplane_bench::sample_message;

const SIZES: [usize; 3] = [1024, 16 * 1024, 64 * 1024];

fn bench_encrypt(c: &mut Criterion) {
    let mut group = c.benchmark_group("encrypt");
    for size in SIZES {
        let message = sample_message(size, 7);
        group.throughput(Throughput::Bytes(size as u64));
        group.bench_with_input(BenchmarkId::from_parameter(size), &message, |b, m| {
            let mut rng = ChaCha20Rng::seed_from_u64(11);
            b.iter(|| encrypt_message(black_box(m), &mut rng).unwrap());
        });
    }
    group.finish();
}

fn bench_decrypt(c: &mut Criterion) {
    let mut group = c.benchmark_group("decrypt");
    for size in SIZES {
        let message = sample_message(size, 7);
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        let bundle = encrypt_message(&message, &mut rng).unwrap();
        group.throughput(Throughput::Bytes(size as u64));
        group.bench_with_input(BenchmarkId::from_parameter(size), &bundle, |b, bundle| {
            b.iter(|| decrypt_message(black_box(bundle)).unwrap());
        });
    }
    group.finish();
}

fn bench_split_merge(c: &mut Criterion) {
    let stream = encode_bits(&sample_message(64 * 1024, 7));
    c.bench_function("split_odd_even 64KiB", |b| {
        b.iter(|| split_odd_even(black_box(&stream)).unwrap());
    });
    let (odd, even) = split_odd_even(&stream).unwrap();
    c.bench_function("merge_odd_even 64KiB", |b| {
        b.iter(|| merge_odd_even(black_box(&odd), black_box(&even)).unwrap());
    });
}

criterion_group!(benches, bench_encrypt, bench_decrypt, bench_split_merge);
criterion_main!(benches);
