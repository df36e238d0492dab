use zetasurf::count::count_surface;
use zetasurf::surface::SurfaceParams;
fn main() {
    let params = SurfaceParams { cubic: [-1, 1, -1], alpha: 1, a: [1, 0, 0, 1, 0, -1, 1] };
    for n in [6u32, 7, 8, 9] {
        let t = std::time::Instant::now();
        let rec = count_surface(&params, 3, n, None).unwrap();
        println!("n={} count={} time={:.2}s", n, rec.count, t.elapsed().as_secs_f64());
    }
}
