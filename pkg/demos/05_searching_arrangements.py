"""
Hunting for characteristic dependence
=====================================

Random arrangements of linear primes rarely produce complexes whose
homology changes with the field.  The search reports every arrangement
that does, with the seed that regenerates it.
"""

from cohomdim.analysis import example_hl, search_char_dependence
from cohomdim.io import emit_search

# few primes relative to d/c: the complex is a full simplex, never a finding
small = search_char_dependence(n_vars=6, c=2, n_primes=2, trials=30, seed=1)
print(f"{small.trials} trials, {small.skipped} skipped, {len(small)} findings")

# injecting the known configuration shows what a finding looks like
hit = search_char_dependence(6, 2, 6, trials=20, seed=7, characteristics=[0, 2, 3],
                             inject=example_hl(2, 7))
for f in hit:
    print("trial", f.trial, "w =", f.w)
print(emit_search(hit, "text").decode())
