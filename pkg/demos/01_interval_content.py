"""
Interval content and the Patterson function
===========================================

Two subsets of Z_N are Z-related when every interval occurs the same
number of times in both, even though no rotation or reflection takes one
to the other.
"""

# %%
# A subset of Z_12 is stored as a bitmask.  The interval function counts,
# for each d, how many members x have x + d also in the set.
from zsets import PcSet, interval_function, interval_content, interval_vector, patterson, parse_set

a = PcSet.of([0, 2, 3, 5], 12)
print(a, interval_function(a, a))

# %%
# The Patterson polynomial A(x)A(1/x) mod x^N - 1 has exactly these
# coefficients, so either can serve as the fingerprint.
print(patterson(a))
assert patterson(a).coefficients == interval_vector(a).counts

# %%
# Interval content folds the vector onto 1..N/2.  For even N the tritone
# count is halved because every such pair is seen twice.
print(interval_content(a))

# %%
# Compact base-36 literals come from the chord tables: "15ab" is {1,5,10,11}.
print(parse_set("15ab", 12), interval_content(parse_set("15ab", 12)))

# %%
# The same identity checked numerically for a batch of random sets, using
# the FFT: |FFT(indicator)|^2 is the transform of the interval vector.
import numpy as np

rng = np.random.default_rng(0)
for _ in range(5):
    n = int(rng.integers(4, 33))
    bits = rng.integers(0, 2, n)
    s = PcSet.of(np.flatnonzero(bits).tolist(), n)
    spectral = np.rint(np.fft.ifft(np.abs(np.fft.fft(bits)) ** 2).real).astype(int)
    print(n, s, tuple(spectral) == interval_vector(s).counts)
