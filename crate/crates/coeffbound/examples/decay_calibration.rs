//! Calibration sweep behind `landau::CALIBRATED_DECAY_K`: reports the
//! worst observed ratio |b_{n,nu}| / (n^2 (1+1/(4n))^{-nu}).

fn main() {
    let mut worst = (0.0f64, 0usize, 0usize);
    for n in 1..=30usize {
        let table = coeffbound::landau::taylor_f_n(n, 2001);
        let rho = 1.0 + 1.0 / (4.0 * n as f64);
        let mut weight = 1.0 / (n * n) as f64;
        for (nu, &b) in table.coeffs.iter().enumerate() {
            let v = b.abs() * weight;
            if v > worst.0 {
                worst = (v, n, nu);
            }
            weight *= rho;
        }
    }
    println!(
        "observed max = {:.6} at n = {}, nu = {}",
        worst.0, worst.1, worst.2
    );
}
