"""Independent high-precision oracle for the frozen values in the C++ tests.

Evaluates the Cheney-Sharma basis straight from its defining formula with
50-digit mpmath arithmetic (no log-space, no grouped endpoints) and sums the
operators directly. Run with `python3 tests/oracle/derive_expected.py`.
"""
import mpmath as mp

mp.mp.dps = 50


def q(m, beta, t, i):
    t = mp.mpf(t)
    beta = mp.mpf(beta)
    if i == 0:
        return (1 - t) * (1 - t + m * beta) ** (m - 1) / (1 + m * beta) ** (m - 1)
    if i == m:
        return t * (t + m * beta) ** (m - 1) / (1 + m * beta) ** (m - 1)
    return (mp.binomial(m, i) * t * (t + i * beta) ** (i - 1) * (1 - t)
            * (1 - t + (m - i) * beta) ** (m - i - 1) / (1 + m * beta) ** (m - 1))


def second_moment(m, beta, t):
    return sum(q(m, beta, t, i) * (mp.mpf(i) / m) ** 2 for i in range(m + 1))


def qx(F, m, beta, x, y, g):
    gy = g(y)
    t = mp.mpf(x) / gy
    return sum(q(m, beta, t, i) * F(i * gy / m, y) for i in range(m + 1))


def qy(F, n, b, x, y, f):
    fx = f(x)
    t = mp.mpf(y) / fx
    return sum(q(n, b, t, j) * F(x, j * fx / n) for j in range(n + 1))


def line_f(x):
    return 1 - mp.mpf(x)


def gentle(x, y):
    return mp.exp(-mp.mpf(81) / 16 * ((x - mp.mpf('0.5')) ** 2 + (y - mp.mpf('0.5')) ** 2)) / 3


def show(label, value):
    print(f"{label} = {mp.nstr(value, 20)}")


show("second_moment(m=2,beta=1,t=0.5)", second_moment(2, 1, mp.mpf('0.5')))
show("second_moment(m=10,beta=0.5,t=0.25)", second_moment(10, mp.mpf('0.5'), mp.mpf('0.25')))

x, y = mp.mpf('0.5'), mp.mpf('0.25')
g = line_f(y)
t = x / g
qe20 = sum(q(5, 1, t, i) * (i * g / 5) ** 2 for i in range(6))
show("moment_gap_x(line,m=5,beta=1,(0.5,0.25))", qe20 - x ** 2)
qe30 = sum(q(5, 1, t, i) * (i * g / 5) ** 3 for i in range(6))
show("remainder(qx,e30,line,m=5,beta=1,(0.5,0.25))", x ** 3 - qe30)
s = mp.mpf('0.3')
kernel = max(x - s, 0) - sum(q(5, 1, t, i) * max(i * g / 5 - s, 0) for i in range(6))
show("peano_kernel(line,m=5,beta=1,(0.5,0.25),s=0.3)", kernel)

# P1 = Qx Qy on the straight-line triangle, Gentle field
x1, y1 = mp.mpf('0.25'), mp.mpf('0.25')
p1 = qx(lambda u, v: qy(gentle, 6, 1, u, v, line_f), 5, 1, x1, y1, line_f)
show("p1(gentle,line,m=5,n=6,(0.25,0.25))", p1)
x2, y2 = mp.mpf('0.3'), mp.mpf('0.3')
a = qx(gentle, 5, 1, x2, y2, line_f)
bq = qy(gentle, 6, 1, x2, y2, line_f)
c = qx(lambda u, v: qy(gentle, 6, 1, u, v, line_f), 5, 1, x2, y2, line_f)
show("s1(gentle,line,m=5,n=6,(0.3,0.3))", a + bq - c)
