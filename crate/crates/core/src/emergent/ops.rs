//! Operations derived from `∘_ε` and `•_ε`.

use super::family::IrqFamily;
use super::scale::Scale;

/// `x ∘_k u`: the k-fold composition of `x ∘ ·` at the base ratio, or of
/// `x • ·` for negative `k`. `k = 0` returns `u`.
pub fn iterate<F: IrqFamily + ?Sized>(f: &F, x: &F::Point, u: &F::Point, k: i32) -> F::Point {
    let base = f.base_ratio();
    let mut acc = u.clone();
    for _ in 0..k.unsigned_abs() {
        acc = if k > 0 {
            f.circle(&base, x, &acc)
        } else {
            f.bullet(&base, x, &acc)
        };
    }
    acc
}

/// `x •_k u`, so that `iterate(x, u, -k) == bullet_iterate(x, u, k)`.
pub fn bullet_iterate<F: IrqFamily + ?Sized>(
    f: &F,
    x: &F::Point,
    u: &F::Point,
    k: i32,
) -> F::Point {
    let base = f.base_ratio();
    let mut acc = u.clone();
    for _ in 0..k.unsigned_abs() {
        acc = if k > 0 {
            f.bullet(&base, x, &acc)
        } else {
            f.circle(&base, x, &acc)
        };
    }
    acc
}

/// `v -^x_ε u = Δ^x_ε(u, v) = (x ∘_ε u) •_ε (x ∘_ε v)`.
pub fn rel_difference<F: IrqFamily + ?Sized>(
    f: &F,
    x: &F::Point,
    u: &F::Point,
    v: &F::Point,
    s: &Scale,
) -> F::Point {
    let xu = f.circle(s, x, u);
    let xv = f.circle(s, x, v);
    f.bullet(s, &xu, &xv)
}

/// `u +^x_ε v = Σ^x_ε(u, v) = x •_ε ((x ∘_ε u) ∘_ε v)`.
pub fn rel_sum<F: IrqFamily + ?Sized>(
    f: &F,
    x: &F::Point,
    u: &F::Point,
    v: &F::Point,
    s: &Scale,
) -> F::Point {
    let xu = f.circle(s, x, u);
    let inner = f.circle(s, &xu, v);
    f.bullet(s, x, &inner)
}

/// `-^x_ε u = inv^x_ε u = (x ∘_ε u) •_ε x`.
pub fn rel_inverse<F: IrqFamily + ?Sized>(
    f: &F,
    x: &F::Point,
    u: &F::Point,
    s: &Scale,
) -> F::Point {
    let xu = f.circle(s, x, u);
    f.bullet(s, &xu, x)
}
