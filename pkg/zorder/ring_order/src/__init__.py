"""Library code for the multiplicative order on Z_n.

arith holds integer primitives, poset the order relation and classification, structure the
theorem-based constructions, oracle the brute-force counterparts, verify the campaign comparing both
and render the text output formats.
"""
