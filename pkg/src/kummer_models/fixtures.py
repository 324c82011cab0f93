"""Bundled covers with known outcomes, used by the tests and the strict-mode checks."""

# (name, p, d, Kummer generator, expected type or the exception class name)
COVERS = [
    ("non-extendible example", 3, 3, "(1+pi^12*(1+Z^2))*(1+Z^2+pi^3*Z)^3", (0, 4, 1, 5)),
    ("non-extendible, gamma1 = 5", 3, 3, "(1+pi^15*(1+Z^2))*(1+Z^2+pi^3*Z)^3", (0, 5, 1, 6)),
    ("mu_p^2-torsor", 3, 1, "1+Z^2", (0, 0, 0, 0)),
    ("G_{pi,2}-torsor", 3, 3, "1+pi^9*(1+Z^2)", (1, 3, 1, 3)),
    ("G_{pi^2,2}-torsor", 3, 3, "1+pi^18*(1+Z^2)", (2, 6, 2, 6)),
    ("second step trivial", 3, 3, "(1+pi^12*(1+Z^2))*(1+Z)^3", (0, 4, 0, 4)),
    ("p = 5, j = v(lambda2)", 5, 1, "1+pi^25*(1+Z^2)", (1, 5, 1, 5)),
    ("p = 5, E(2,0,0,1)", 5, 1, "(1+pi^10*(1+Z^2))*(1+Z)^5", (0, 2, 0, 2)),
    ("unit square of a torsor", 3, 3, "(1+pi^9*(1+Z^2))^2", (1, 3, 1, 3)),
    ("non-reduced second step", 3, 1, "(1+pi^3*(1+Z^2))*(1+Z^2)^3", "HypothesisError"),
    ("non-reduced first step", 3, 1, "1+pi*Z", "HypothesisError"),
]
