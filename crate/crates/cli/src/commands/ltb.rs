use std::path::{Path, PathBuf};

use clap::Args;
use luka_ltb::{
    basis_matrix, compress_padded, decompress, inverse_l, parse_dims, psnr, reconstruct_padded, transform_h,
    BlockSpec, LtbError, LtbFile, Padding, Raster, RasterFormat, Q,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::mv::yes;
use crate::{CliError, Context, Entry, Registry, Status};

pub fn register(r: &mut Registry) {
    r.register(Entry::new("ltb", "compress", "Compress a PGM/PPM image into an .ltb container", compress_cmd))
        .register(Entry::new("ltb", "decompress", "Reconstruct an image from an .ltb container", decompress_cmd))
        .register(Entry::new(
            "ltb",
            "roundtrip",
            "Repeated in-memory compress and reconstruct, reporting PSNR and losslessness of later passes",
            roundtrip,
        ))
        .register(Entry::new(
            "ltb",
            "laws",
            "Residuation identities of the transform on random rational vectors",
            laws,
        ));
}

#[derive(Args, Debug)]
struct BlockArgs {
    /// Source block, rows x columns
    #[arg(long, value_name = "AxB")]
    block: String,
    /// Compressed block, rows x columns
    #[arg(long, value_name = "CxD")]
    target: String,
    /// Fill for edge blocks: replicate or white
    #[arg(long, value_name = "MODE", default_value = "replicate")]
    pad: String,
}

impl BlockArgs {
    fn spec(&self) -> Result<(BlockSpec, Padding), CliError> {
        let dims = |s: &str| parse_dims(s).ok_or_else(|| CliError::Usage(format!("expected AxB, found `{s}`")));
        let (a, b) = dims(&self.block)?;
        let (c, d) = dims(&self.target)?;
        let spec = BlockSpec::new(a, b, c, d).map_err(CliError::usage)?;
        Ok((spec, self.pad.parse().map_err(CliError::usage)?))
    }
}

fn read_raster(path: &Path) -> Result<Raster, CliError> {
    Raster::read(path).map_err(|e| match e {
        LtbError::Io(io) => CliError::Usage(format!("cannot read {}: {io}", path.display())),
        other => CliError::Usage(format!("{}: {other}", path.display())),
    })
}

fn write_err(path: &Path) -> impl Fn(LtbError) -> CliError + '_ {
    move |e| CliError::Usage(format!("cannot write {}: {e}", path.display()))
}

fn fmt_psnr(v: f64) -> String {
    if v.is_infinite() {
        "inf".into()
    } else {
        format!("{v:.4} dB")
    }
}

#[derive(Args, Debug)]
struct CompressArgs {
    #[command(flatten)]
    blocks: BlockArgs,
    /// PGM or PPM image
    input: PathBuf,
    /// Container to write
    output: PathBuf,
}

fn compress_cmd(args: &CompressArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let (spec, pad) = args.blocks.spec()?;
    let r = read_raster(&args.input)?;
    let c = compress_padded(&r, spec, pad).map_err(CliError::failed)?;
    let file = LtbFile::from_compressed(&c).map_err(CliError::failed)?;
    file.write(&args.output).map_err(write_err(&args.output))?;
    let (rows, cols) = spec.grid(r.width(), r.height());
    ctx.line(format!("image {}x{}, {} channel(s)", r.width(), r.height(), r.channels()));
    ctx.line(format!("blocks {}x{} -> {}x{}, grid {rows}x{cols}", spec.a, spec.b, spec.c, spec.d));
    ctx.line(format!("rho {}", ctx.ratio(spec.n() as i64, spec.m() as i64)));
    ctx.line(format!("payload {} bytes", file.payload.len()));
    Ok(Status::Pass)
}

#[derive(Args, Debug)]
struct DecompressArgs {
    /// .ltb container
    input: PathBuf,
    /// Image to write
    output: PathBuf,
    /// Write P2/P3 text instead of P5/P6
    #[arg(long)]
    ascii: bool,
}

fn decompress_cmd(args: &DecompressArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let file = LtbFile::read(&args.input).map_err(|e| match e {
        LtbError::Io(io) => CliError::Usage(format!("cannot read {}: {io}", args.input.display())),
        other => CliError::Usage(format!("{}: {other}", args.input.display())),
    })?;
    let r = decompress(&file.to_compressed()).map_err(CliError::failed)?;
    let format = if args.ascii { RasterFormat::Ascii } else { RasterFormat::Binary };
    r.write(&args.output, format).map_err(write_err(&args.output))?;
    ctx.line(format!("image {}x{}, {} channel(s)", r.width(), r.height(), r.channels()));
    ctx.line(format!("rho {}", ctx.ratio(file.spec.n() as i64, file.spec.m() as i64)));
    Ok(Status::Pass)
}

#[derive(Args, Debug)]
struct RoundtripArgs {
    #[command(flatten)]
    blocks: BlockArgs,
    /// Number of compress+reconstruct passes, at least 2
    #[arg(long, value_name = "N", default_value_t = 2)]
    trials: usize,
    /// PGM or PPM image
    input: PathBuf,
}

fn roundtrip(args: &RoundtripArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    if args.trials < 2 {
        return Err(CliError::Usage("--trials must be at least 2".into()));
    }
    let (spec, pad) = args.blocks.spec()?;
    let original = read_raster(&args.input)?;
    ctx.line(format!("rho {}", ctx.ratio(spec.n() as i64, spec.m() as i64)));
    let first = reconstruct_padded(&original, spec, pad).map_err(CliError::failed)?;
    ctx.line(format!("pass 1: psnr {}", fmt_psnr(psnr(&original, &first).map_err(CliError::failed)?)));
    let mut prev = first;
    let mut lossless = true;
    for pass in 2..=args.trials {
        let next = reconstruct_padded(&prev, spec, pad).map_err(CliError::failed)?;
        let same = next == prev;
        ctx.line(format!("pass {pass}: identical to pass {}: {}", pass - 1, yes(same)));
        lossless &= same;
        prev = next;
    }
    ctx.line(format!("later passes lossless: {}", yes(lossless)));
    Ok(Status::from_bool(lossless))
}

#[derive(Args, Debug)]
struct LawsArgs {
    /// Input length m = ab
    #[arg(long)]
    m: usize,
    /// Output length n = cd
    #[arg(long)]
    n: usize,
    /// Random vectors checked per identity
    #[arg(long, value_name = "T", default_value_t = 1000)]
    trials: usize,
    /// Largest denominator of the random entries
    #[arg(long, value_name = "D", default_value_t = 60)]
    denominator: i64,
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize, max_den: i64) -> Vec<Q> {
    (0..len)
        .map(|_| {
            let d = rng.gen_range(1..=max_den);
            Q::new(rng.gen_range(0..=d), d)
        })
        .collect()
}

fn laws(args: &LawsArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    if args.denominator < 1 {
        return Err(CliError::Usage("--denominator must be positive".into()));
    }
    let p = basis_matrix(args.m, args.n).map_err(CliError::usage)?;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let leq = |x: &[Q], y: &[Q]| x.iter().zip(y).all(|(a, b)| a <= b);
    let mut failures = [0usize; 4];
    for _ in 0..args.trials {
        let f = random_vector(&mut rng, args.m, args.denominator);
        let g = random_vector(&mut rng, args.n, args.denominator);
        let h = |v: &[Q]| transform_h(v, &p).expect("valid input");
        let l = |v: &[Q]| inverse_l(v, &p).expect("valid input");
        let (hf, lg) = (h(&f), l(&g));
        failures[0] += usize::from(leq(&hf, &g) != leq(&f, &lg));
        let lhf = l(&hf);
        failures[1] += usize::from(h(&lhf) != hf);
        failures[2] += usize::from(l(&h(&lg)) != lg);
        failures[3] += usize::from(l(&h(&lhf)) != lhf);
    }
    let names = ["H(f) <= g iff f <= L(g)", "H L H = H", "L H L = L", "(L H)^2 = L H"];
    ctx.line(format!("m = {}, n = {}, {} trials, seed {}", args.m, args.n, args.trials, ctx.seed));
    for (name, fails) in names.iter().zip(failures) {
        ctx.line(format!("  {name}: {}", if fails == 0 { "holds".to_string() } else { format!("{fails} failures") }));
    }
    Ok(Status::from_bool(failures.iter().all(|&f| f == 0)))
}
