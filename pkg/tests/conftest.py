import numpy as np


def rk4_evolve(H: np.ndarray, psi0: np.ndarray, t: float,
               step: float = 1e-3) -> np.ndarray:
    """Independent fixed-step RK4 integrator for i dpsi/dt = H psi."""
    n_steps = max(1, int(np.ceil(t / step)))
    dt = t / n_steps
    psi = psi0.astype(complex).copy()

    def rhs(y):
        return -1j * (H @ y)

    for _ in range(n_steps):
        k1 = rhs(psi)
        k2 = rhs(psi + dt / 2 * k1)
        k3 = rhs(psi + dt / 2 * k2)
        k4 = rhs(psi + dt * k3)
        psi = psi + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return psi
