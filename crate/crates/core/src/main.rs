use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use curveremap::clipping::{wa_clip, Crossing};
use curveremap::experiments::{self, AccuracyRun, ExperimentError};
use curveremap::fields::BumpField;
use curveremap::integrate::{green_area, triangulate};
use curveremap::mesh::{
    exact_cell_averages, gen_deformed_square_mesh, gen_disk_mesh, read_field, read_mesh, write_field, write_mesh,
    DeformKind, MeshError,
};
use curveremap::remap::{remap, Approach, RemapOptions, RemapReport};
use curveremap::svg::{Layer, Scene};

#[derive(Parser)]
#[command(name = "curveremap", version, about = "Conservative remapping between curvilinear quadrilateral meshes")]
struct Cli {
    /// Worker threads, 0 for one per core.
    #[arg(long, global = true, env = "CURVEREMAP_THREADS", default_value_t = 0)]
    threads: usize,
    /// Only print errors.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct OutDir {
    /// Output directory, created if missing.
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Kind {
    Identity,
    TaylorGreenLike,
    GreshoLike,
    Disk,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OnOff {
    On,
    Off,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a mesh file, optionally with exact cell averages of a field.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..=8))]
        degree: u64,
        /// Deformation amplitude; defaults to the experiment value of the kind.
        #[arg(long)]
        amplitude: Option<f64>,
        /// Also write exact averages of sin, cone, cylinder or solid_body.
        #[arg(long)]
        field: Option<String>,
        #[command(flatten)]
        out: OutDir,
    },
    /// Remap a field from one mesh onto another.
    Remap {
        #[arg(long)]
        src_mesh: PathBuf,
        #[arg(long)]
        src_field: PathBuf,
        #[arg(long)]
        dst_mesh: PathBuf,
        #[arg(long, default_value_t = 3, value_parser = parse_order)]
        order: usize,
        #[arg(long, value_enum, default_value = "off")]
        positivity: OnOff,
        #[arg(long, default_value = "A")]
        approach: Approach,
        /// Report file; defaults to report.txt in the output directory.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        out: OutDir,
    },
    /// Convergence and conservation tables for sin(πx) + sin(πy).
    Accuracy {
        #[arg(long, value_delimiter = ',', default_value = "8,16,32,64", value_parser = parse_size)]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1,3,5", value_parser = parse_order)]
        orders: Vec<usize>,
        #[arg(long, default_value = "A")]
        approach: Approach,
        #[command(flatten)]
        out: OutDir,
    },
    /// Cone field remapped with and without the positivity limiter.
    Cone(BumpArgs),
    /// Cylinder field remapped with and without the positivity limiter.
    Cylinder(BumpArgs),
    /// Solid body rotation of the disk mesh in steps of π/4.
    Rotation {
        /// Mesh sizes; odd sizes leave the rotated boundaries mismatched.
        #[arg(long, value_delimiter = ',', default_value = "30,60", value_parser = parse_size)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = experiments::ROTATION_STEPS)]
        steps: usize,
        #[arg(long, default_value = "A")]
        approach: Approach,
        #[command(flatten)]
        out: OutDir,
    },
    /// The worked clipping example: points, areas and pictures.
    Clipdemo {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..=3))]
        degree: u64,
        #[command(flatten)]
        out: OutDir,
    },
    /// Clip one cell of a mesh against one cell of another (debugging aid).
    Clip {
        #[arg(long)]
        src_mesh: PathBuf,
        #[arg(long)]
        src_cell: usize,
        #[arg(long)]
        dst_mesh: PathBuf,
        #[arg(long)]
        dst_cell: usize,
        #[command(flatten)]
        out: OutDir,
    },
}

#[derive(Args)]
struct BumpArgs {
    #[arg(long, default_value_t = 32, value_parser = parse_size)]
    n: usize,
    #[arg(long, default_value_t = 3, value_parser = parse_order)]
    order: usize,
    #[arg(long, default_value = "A")]
    approach: Approach,
    #[command(flatten)]
    out: OutDir,
}

fn parse_order(s: &str) -> Result<usize, String> {
    match s.parse() {
        Ok(k @ (1 | 3 | 5)) => Ok(k),
        _ => Err(format!("order must be 1, 3 or 5, got '{s}'")),
    }
}

fn parse_size(s: &str) -> Result<usize, String> {
    match s.parse() {
        Ok(n) if n >= 2 => Ok(n),
        _ => Err(format!("mesh size must be an integer >= 2, got '{s}'")),
    }
}

/// Failure with its exit code.
enum Failure {
    Usage(String),
    Numerical(String),
}

impl From<ExperimentError> for Failure {
    fn from(e: ExperimentError) -> Self {
        Failure::Numerical(e.to_string())
    }
}

impl From<MeshError> for Failure {
    fn from(e: MeshError) -> Self {
        match e {
            MeshError::Parse { .. } | MeshError::Io(_) => Failure::Usage(e.to_string()),
            _ => Failure::Numerical(e.to_string()),
        }
    }
}

/// Reads an input file, naming it in any error.
fn load<T>(path: &Path, read: impl Fn(&Path) -> Result<T, MeshError>) -> Result<T, Failure> {
    read(path).map_err(|e| match Failure::from(e) {
        Failure::Usage(m) => Failure::Usage(format!("{}: {m}", path.display())),
        Failure::Numerical(m) => Failure::Numerical(format!("{}: {m}", path.display())),
    })
}

struct Ctx {
    quiet: bool,
}

impl Ctx {
    fn say(&self, s: impl AsRef<str>) {
        if !self.quiet {
            println!("{}", s.as_ref());
        }
    }

    fn write(&self, dir: &Path, name: &str, content: &str) -> Result<PathBuf, Failure> {
        fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("creating {}: {e}", dir.display())))?;
        let p = dir.join(name);
        fs::write(&p, content).map_err(|e| Failure::Usage(format!("writing {}: {e}", p.display())))?;
        self.say(format!("wrote {}", p.display()));
        Ok(p)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = Ctx { quiet: cli.quiet };
    match run(cli.cmd, &ctx) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Numerical(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn run(cmd: Cmd, ctx: &Ctx) -> Result<(), Failure> {
    match cmd {
        Cmd::Gen { kind, n, degree, amplitude, field, out } => gen(ctx, kind, n as usize, degree as usize, amplitude, field, &out.out),
        Cmd::Remap { src_mesh, src_field, dst_mesh, order, positivity, approach, report, out } => {
            let s = load(&src_mesh, read_mesh)?;
            let f = load(&src_field, read_field)?;
            let t = load(&dst_mesh, read_mesh)?;
            if f.len() != s.num_cells() {
                return Err(Failure::Usage(format!("field has {} values but the source mesh has {} cells", f.len(), s.num_cells())));
            }
            let opts = RemapOptions::new(order).positivity(positivity == OnOff::On).approach(approach);
            let r = remap(&s, &f, &t, opts).map_err(|e| Failure::Numerical(e.to_string()))?;
            for w in &r.warnings {
                eprintln!("warning: {w}");
            }
            fs::create_dir_all(&out.out).map_err(|e| Failure::Usage(e.to_string()))?;
            write_field(&r.field, &out.out.join("remapped.field"))?;
            ctx.say(format!("wrote {}", out.out.join("remapped.field").display()));
            let kv = r.to_key_value();
            match report {
                Some(p) => {
                    fs::write(&p, &kv).map_err(|e| Failure::Usage(format!("writing {}: {e}", p.display())))?;
                    ctx.say(format!("wrote {}", p.display()));
                }
                None => {
                    ctx.write(&out.out, "report.txt", &kv)?;
                }
            }
            ctx.write(&out.out, "report.csv", &format!("{}\n{}\n", RemapReport::csv_header(), r.csv_row()))?;
            ctx.write(&out.out, "cells.csv", &experiments::cell_csv(&t, &r.field))?;
            ctx.say(kv.trim_end());
            Ok(())
        }
        Cmd::Accuracy { sizes, orders, approach, out } => accuracy(ctx, &sizes, &orders, approach, &out.out),
        Cmd::Cone(a) => bump(ctx, "cone", &BumpField::square_cone(), a),
        Cmd::Cylinder(a) => bump(ctx, "cylinder", &BumpField::square_cylinder(), a),
        Cmd::Rotation { sizes, steps, approach, out } => rotation(ctx, &sizes, steps, approach, &out.out),
        Cmd::Clipdemo { degree, out } => clipdemo(ctx, degree as usize, &out.out),
        Cmd::Clip { src_mesh, src_cell, dst_mesh, dst_cell, out } => {
            let s = load(&src_mesh, read_mesh)?;
            let t = load(&dst_mesh, read_mesh)?;
            if src_cell >= s.num_cells() || dst_cell >= t.num_cells() {
                return Err(Failure::Usage("cell index out of range".into()));
            }
            let (p, q) = (s.cell_polygon(src_cell), t.cell_polygon(dst_cell));
            let r = wa_clip(&p, &q).map_err(|e| Failure::Numerical(e.to_string()))?;
            ctx.say(format!("containment={:?}", r.containment));
            for i in &r.intersections {
                ctx.say(format!("point {:.16e} {:.16e} {}", i.point.x, i.point.y, label(i.kind)));
            }
            for (k, l) in r.loops.iter().enumerate() {
                ctx.say(format!("loop {k}: spans={} area={:.16e}", l.len(), green_area(l)));
                let tris = triangulate(l).map_err(|e| Failure::Numerical(e.to_string()))?;
                ctx.say(format!("loop {k}: triangles={}", tris.len()));
            }
            let mut sc = Scene::new();
            sc.layers.push(Layer::new(vec![p], "black", "none"));
            sc.layers.push(Layer::new(vec![q], "red", "none"));
            sc.layers.push(Layer::new(r.loops.clone(), "blue", "rgba(0,0,255,0.2)"));
            ctx.write(&out.out, "clip.svg", &sc.render())?;
            Ok(())
        }
    }
}

fn label(k: Option<Crossing>) -> &'static str {
    match k {
        Some(Crossing::Entry) => "entry",
        Some(Crossing::Exit) => "exit",
        None => "touch",
    }
}

fn gen(ctx: &Ctx, kind: Kind, n: usize, degree: usize, amplitude: Option<f64>, field: Option<String>, out: &Path) -> Result<(), Failure> {
    let (mesh, name) = match kind {
        Kind::Disk => (gen_disk_mesh(n, degree)?, "disk"),
        _ => {
            let (dk, a, name) = match kind {
                Kind::Identity => (DeformKind::Identity, 0.0, "identity"),
                Kind::TaylorGreenLike => (DeformKind::TaylorGreenLike, experiments::TAYLOR_GREEN_AMPLITUDE, "taylor_green_like"),
                _ => (DeformKind::GreshoLike, experiments::GRESHO_AMPLITUDE, "gresho_like"),
            };
            (gen_deformed_square_mesh(n, dk, amplitude.unwrap_or(a), degree)?, name)
        }
    };
    fs::create_dir_all(out).map_err(|e| Failure::Usage(e.to_string()))?;
    let stem = format!("{name}_n{n}_d{degree}");
    let p = out.join(format!("{stem}.mesh"));
    write_mesh(&mesh, &p)?;
    ctx.say(format!("wrote {} ({} cells)", p.display(), mesh.num_cells()));
    if let Some(f) = field {
        let af = experiments::named_field(&f).ok_or_else(|| Failure::Usage(format!("unknown field '{f}'")))?;
        let v = exact_cell_averages(&mesh, af.as_ref()).map_err(|e| Failure::Numerical(e.to_string()))?;
        let fp = out.join(format!("{stem}_{f}.field"));
        write_field(&v, &fp)?;
        ctx.say(format!("wrote {}", fp.display()));
    }
    Ok(())
}

fn accuracy(ctx: &Ctx, sizes: &[usize], orders: &[usize], approach: Approach, out: &Path) -> Result<(), Failure> {
    let runs: Vec<AccuracyRun> = experiments::accuracy(sizes, orders, approach)?;
    let conv = experiments::convergence_csv(&runs);
    let cons = experiments::conservation_csv(&runs);
    ctx.write(out, "accuracy.csv", &conv)?;
    ctx.write(out, "conservation.csv", &cons)?;
    ctx.say(conv.trim_end());
    ctx.say(cons.trim_end());
    if sizes.len() > 1 {
        for &o in orders {
            let r: Vec<&AccuracyRun> = runs.iter().filter(|r| r.order == o).collect();
            let ns: Vec<usize> = r.iter().map(|r| r.n).collect();
            let es: Vec<f64> = r.iter().map(|r| r.errors.l1).collect();
            ctx.say(format!("order {o}: fitted L1 slope {:.3}", experiments::observed_order(&ns, &es)));
        }
    }
    Ok(())
}

fn bump(ctx: &Ctx, name: &str, field: &BumpField, a: BumpArgs) -> Result<(), Failure> {
    let (s, t, runs) = experiments::bump_runs(field, a.n, a.order, a.approach)?;
    let mut csv = format!("{}\n", RemapReport::csv_header());
    ctx.write(&a.out.out, &format!("{name}_source_cells.csv"), &experiments::cell_csv(&s, &runs[0].source))?;
    for r in &runs {
        let rep = &r.report;
        let tag = if rep.positivity { "limiter" } else { "nolimiter" };
        csv.push_str(&rep.csv_row());
        csv.push('\n');
        ctx.write(&a.out.out, &format!("{name}_{tag}_cells.csv"), &experiments::cell_csv(&t, &rep.field))?;
        let negative = rep.field.values.iter().filter(|v| **v < 0.0).count();
        ctx.say(format!(
            "{name} {tag}: min_average={:.6e} negative_cells={negative} limited_cells={} e_cons={:.3e}",
            rep.min_average, rep.limited_cells, rep.e_cons
        ));
        for w in &rep.warnings {
            eprintln!("warning: {w}");
        }
    }
    ctx.write(&a.out.out, &format!("{name}.csv"), &csv)?;
    Ok(())
}

fn rotation(ctx: &Ctx, sizes: &[usize], steps: usize, approach: Approach, out: &Path) -> Result<(), Failure> {
    let mut summary = String::from("n,order,positivity,cells,max_drift,min_average,l1_difference\n");
    for &n in sizes {
        for (order, lim) in [(1, false), (3, false), (3, true)] {
            let r = experiments::rotation(n, order, lim, steps, approach)?;
            let tag = format!("n{n}_order{order}_{}", if lim { "limiter" } else { "nolimiter" });
            ctx.write(out, &format!("rotation_{tag}.csv"), &experiments::rotation_csv(&r))?;
            if order == 1 {
                ctx.write(out, &format!("rotation_n{n}_initial_cells.csv"), &experiments::cell_csv(&r.mesh, &r.initial))?;
            }
            if let (Some(first), Some(last)) = (r.fields.first(), r.fields.last()) {
                let m1 = curveremap::mesh::rotate_mesh(&r.mesh, std::f64::consts::FRAC_PI_4, Default::default())?;
                ctx.write(out, &format!("rotation_{tag}_step1_cells.csv"), &experiments::cell_csv(&m1, first))?;
                if steps % 8 == 0 {
                    ctx.write(out, &format!("rotation_{tag}_final_cells.csv"), &experiments::cell_csv(&r.mesh, last))?;
                }
            }
            let drift = r.steps.iter().map(|s| s.drift).fold(0.0, f64::max);
            let min = r.steps.iter().map(|s| s.min_average).fold(f64::INFINITY, f64::min);
            let line = format!(
                "{n},{order},{},{},{drift:.4e},{min:.6e},{:.6e}",
                if lim { "on" } else { "off" },
                r.mesh.num_cells(),
                r.l1_difference
            );
            ctx.say(format!("rotation {tag}: max_drift={drift:.3e} min_average={min:.3e} l1_difference={:.4e}", r.l1_difference));
            summary.push_str(&line);
            summary.push('\n');
        }
    }
    ctx.write(out, "rotation_summary.csv", &summary)?;
    Ok(())
}

fn clipdemo(ctx: &Ctx, degree: usize, out: &Path) -> Result<(), Failure> {
    let d = experiments::clip_demo(degree)?;
    for (k, (p, kind)) in d.points().iter().enumerate() {
        ctx.say(format!("{:>2} {:>14.10} {:>14.10} {}", k + 1, p.x, p.y, label(*kind)));
    }
    ctx.say(format!("area_A={:.16}", d.area_a));
    ctx.say(format!("area_B={:.16}", d.area_b));
    ctx.say(format!("difference={:.3e}", (d.area_a - d.area_b).abs()));
    let mut csv = String::from("point,x,y,kind\n");
    for (k, (p, kind)) in d.points().iter().enumerate() {
        csv.push_str(&format!("{},{:.16e},{:.16e},{}\n", k + 1, p.x, p.y, label(*kind)));
    }
    csv.push_str(&format!("area_A,{:.16e},,\narea_B,{:.16e},,\n", d.area_a, d.area_b));
    ctx.write(out, &format!("clipdemo_d{degree}.csv"), &csv)?;

    let (p, q) = (curveremap::demo::quad_p(degree), curveremap::demo::quad_q(degree));
    let mut sc = Scene::new();
    sc.layers.push(Layer::new(vec![p.clone()], "black", "none"));
    sc.layers.push(Layer::new(vec![q.clone()], "red", "none"));
    sc.layers.push(Layer::new(d.clip.loops.clone(), "blue", "rgba(0,0,255,0.15)"));
    sc.markers = d.points().iter().map(|(p, _)| (*p, "blue".to_string())).collect();
    ctx.write(out, &format!("clipdemo_d{degree}.svg"), &sc.render())?;

    let mut tri = Scene::new();
    tri.layers.push(Layer::new(vec![p], "lightgray", "none"));
    tri.layers.push(Layer::new(vec![q], "lightgray", "none"));
    tri.layers.push(Layer::new(d.triangles.iter().map(|t| t.polygon()).collect(), "blue", "rgba(0,0,255,0.1)"));
    ctx.write(out, &format!("clipdemo_d{degree}_triangles.svg"), &tri.render())?;
    Ok(())
}
