"""Orthogonal polynomials for the spectrum-weighted inner product.

The inner product is <f, g> = (1/n) * sum_i m_i f(lambda_i) g(lambda_i).
Gram-Schmidt on the monomial basis, normalized so that ||p_i||^2 = p_i(lambda_0),
yields the predistance polynomials; for distance-regular graphs these are the
distance polynomials.  Polynomials are coefficient vectors, index = degree.
"""

import math
from dataclasses import dataclass

import numpy as np


class PredistanceError(ValueError):
    """Conditioning or normalization breakdown while building the system."""


def poly_eval(coeffs, x):
    """Horner evaluation of a coefficient vector at scalar or array x."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    result = np.zeros_like(np.asarray(x, dtype=np.float64))
    for c in coeffs[::-1]:
        result = result * x + c
    return result if result.ndim else float(result)


def poly_eval_matrix(coeffs, A):
    """Horner evaluation with a square matrix argument, p(A)."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    A = np.asarray(A, dtype=np.float64)
    eye = np.eye(A.shape[0])
    result = np.zeros_like(A)
    for c in coeffs[::-1]:
        result = result @ A + c * eye
    return result


def _shift(coeffs):
    # multiply by x
    return np.concatenate(([0.0], coeffs))


def spectral_inner_product(f, g, s):
    """(1/n) * sum_i m_i f(lambda_i) g(lambda_i) over the distinct eigenvalues."""
    fv = poly_eval(f, s.values)
    gv = poly_eval(g, s.values)
    return float(np.sum(s.mults * fv * gv) / s.n)


@dataclass
class PredistanceSystem:
    """Predistance polynomials p_0..p_d plus their three-term recurrence.

    Indexing convention for x*p_i = beta[i-1]*p_{i-1} + alpha[i]*p_i
    + gamma[i+1]*p_{i+1}: alpha has entries 0..d, beta entries 0..d-1 are
    meaningful (beta[d] = 0), gamma entries 1..d are meaningful (gamma[0] = 0).
    recurrence_residuals[i] is the weighted-norm defect of row i, where the
    i = d row is compared modulo the minimal polynomial (by evaluation at the
    eigenvalues).
    """

    polys: list
    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    recurrence_residuals: np.ndarray
    spectrum: object

    @property
    def d(self):
        return len(self.polys) - 1


def _recurrence(polys, s):
    d = len(polys) - 1
    norms2 = np.array([spectral_inner_product(p, p, s) for p in polys])
    alpha = np.zeros(d + 1)
    beta = np.zeros(d + 1)
    gamma = np.zeros(d + 1)
    for i in range(d + 1):
        xp = _shift(polys[i])
        alpha[i] = spectral_inner_product(xp, polys[i], s) / norms2[i]
        if i >= 1:
            beta[i - 1] = spectral_inner_product(xp, polys[i - 1], s) / norms2[i - 1]
        if i < d:
            gamma[i + 1] = spectral_inner_product(xp, polys[i + 1], s) / norms2[i + 1]

    # residuals as functions on the spectrum (for i = d this is exactly the
    # comparison modulo the minimal polynomial)
    resid = np.zeros(d + 1)
    vals = s.values
    pv = [poly_eval(p, vals) for p in polys]
    for i in range(d + 1):
        rhs = alpha[i] * pv[i]
        if i >= 1:
            rhs = rhs + beta[i - 1] * pv[i - 1]
        if i < d:
            rhs = rhs + gamma[i + 1] * pv[i + 1]
        diff = vals * pv[i] - rhs
        resid[i] = math.sqrt(max(float(np.sum(s.mults * diff * diff) / s.n), 0.0))
    return alpha, beta, gamma, resid


def predistance_polynomials(s):
    """Build the predistance system for a clustered spectrum.

    Modified Gram-Schmidt (with one re-orthogonalization pass) over the
    monomials 1, x, ..., x^d, then rescale each q so that <p, p> = p(lambda_0);
    the sign comes out positive automatically since p(lambda_0) ends up equal
    to q(lambda_0)^2 / ||q||^2.
    """
    d = s.d
    lam0 = float(s.values[0])
    polys = []
    norms2 = []
    for i in range(d + 1):
        q = np.zeros(i + 1)
        q[i] = 1.0
        mono_norm2 = spectral_inner_product(q, q, s)
        for _ in range(2):
            for j in range(i):
                proj = spectral_inner_product(q, polys[j], s) / norms2[j]
                q[: j + 1] -= proj * polys[j]
        norm2 = spectral_inner_product(q, q, s)
        if norm2 <= 1e-20 * mono_norm2:
            raise PredistanceError(
                "conditioning failure: degree-%d residual norm collapsed" % i
            )
        q0 = poly_eval(q, lam0)
        if abs(q0) <= 1e-12 * math.sqrt(norm2):
            raise PredistanceError(
                "normalization failure: degree-%d polynomial vanishes at lambda_0" % i
            )
        p = (q0 / norm2) * q
        polys.append(p)
        norms2.append(spectral_inner_product(p, p, s))

    alpha, beta, gamma, resid = _recurrence(polys, s)
    return PredistanceSystem(
        polys=polys,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        recurrence_residuals=resid,
        spectrum=s,
    )


def recurrence_coefficients(system):
    """Recompute (alpha, beta, gamma) from the stored polynomials.

    Independent of the values cached on the system, so it doubles as a
    verification path; indexing as documented on PredistanceSystem.
    """
    alpha, beta, gamma, _ = _recurrence(system.polys, system.spectrum)
    return alpha, beta, gamma


def hoffman_polynomial(system):
    """H = p_0 + ... + p_d; for a connected regular graph H(A) is the all-ones matrix."""
    H = np.zeros(system.d + 1)
    for p in system.polys:
        H[: len(p)] += p
    return H


@dataclass
class ParityReport:
    """Verdicts for the parity structure of the system.

    Checks: alpha_i vanishes for i < d, alpha_d does not, and p_i has no
    coefficient of parity opposite to i.  Not applicable (applicable=False)
    unless the graph has finite odd girth >= 2d+1.
    """

    applicable: bool
    interior_alpha_zero: bool = None
    top_alpha_nonzero: bool = None
    coefficient_parity: bool = None
    tol: float = None
    max_interior_alpha: float = None
    top_alpha: float = None
    max_offparity_coeff: float = None

    @property
    def passed(self):
        if not self.applicable:
            return None
        return bool(
            self.interior_alpha_zero and self.top_alpha_nonzero and self.coefficient_parity
        )


def check_parity(system, g_odd_girth, tol=None):
    """Parity checks for a system whose graph has finite odd girth >= 2d+1."""
    d = system.d
    if not (g_odd_girth != math.inf and g_odd_girth >= 2 * d + 1):
        return ParityReport(applicable=False)
    if tol is None:
        tol = 1e-7 * max(float(np.abs(p).max()) for p in system.polys)

    interior = float(np.abs(system.alpha[:d]).max()) if d >= 1 else 0.0
    top = float(abs(system.alpha[d]))
    offparity = 0.0
    for i, p in enumerate(system.polys):
        for j, c in enumerate(p):
            if (j - i) % 2 == 1:
                offparity = max(offparity, abs(float(c)))
    return ParityReport(
        applicable=True,
        interior_alpha_zero=interior <= tol,
        top_alpha_nonzero=top > tol,
        coefficient_parity=offparity <= tol,
        tol=float(tol),
        max_interior_alpha=interior,
        top_alpha=top,
        max_offparity_coeff=offparity,
    )
