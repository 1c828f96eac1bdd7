"""Decomposing GL2(Z) matrices into canonical words over S, U, and J.

S = [[0,-1],[1,0]] and U = [[0,-1],[1,1]] generate SL2(Z), which is the
amalgam of the cyclic groups they generate (orders 4 and 6) over the
center {I, -I}.  Adjoining J = [[0,1],[1,0]] extends this to all of
GL2(Z) as a dihedral amalgam, and every matrix gets one canonical word.
"""

from amalg import (
    Glt2Word,
    Mat2,
    evaluate_word,
    form_to_letters,
    gl2_decompose,
    mat_det,
    mat_mul,
    mat_pow,
    sl2_decompose,
    standard_generators,
    word_to_form,
)

S, U, J = standard_generators()
print(f"S^4 = I: {mat_pow(S, 4) == Mat2(1, 0, 0, 1)}")
print(f"S^2 = U^3 = -I: {mat_pow(S, 2) == mat_pow(U, 3)}")
print(f"J S J = S^-1: {mat_mul(mat_mul(J, S), J) == mat_pow(S, -1)}")

# Determinant-1 matrices reduce by a Euclidean algorithm on the first
# column; the translation T = S^-1 U = [[1,1],[0,1]] does the carrying.
t = mat_mul(mat_pow(S, -1), U)
form = sl2_decompose(t)
print(f"\nT = {t} decomposes with head {form.head}, tail {form.tail}")

# Fibonacci numbers appear as repeated T-steps.
fib = mat_pow(Mat2(1, 1, 1, 0), 6)
form = sl2_decompose(fib)
print(f"fib^6 = {fib}: {len(form.head)} syllables, round trip "
      f"{evaluate_word(form) == fib}")

# Determinant -1 matrices split off one factor of J first.
m = Mat2(2, 3, 1, 2)
big_form = gl2_decompose(mat_mul(m, J))
word = form_to_letters(big_form)
print(f"\ndet {mat_det(mat_mul(m, J))} matrix decomposes to letters {word.letters}")
print(f"round trip: {evaluate_word(word) == mat_mul(m, J)}")

# Words that differ by defining relators reduce to the same form, so the
# canonical word is insensitive to how the matrix was presented.
noisy = Glt2Word((("s", 1), ("j", 2), ("u", 6), ("u", 1)))
clean = Glt2Word((("s", 1), ("u", 1)))
print(f"\nrelator-padded word reduces identically: "
      f"{word_to_form(noisy) == word_to_form(clean)}")

# A 40-letter word whose value is actually simple collapses accordingly.
long_word = Glt2Word((("s", 1), ("u", 5), ("s", 2), ("u", 1)) * 10)
m = evaluate_word(long_word)
canonical = form_to_letters(gl2_decompose(m))
print(f"40 letters in, {len(canonical.letters)} letter(s) out, round trip "
      f"{evaluate_word(canonical) == m}")
