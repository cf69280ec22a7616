"""Runtime size caps for the enumeration-heavy operations.

Everything in this package is exact and exhaustive, so costs grow fast
with the degree.  The caps below guard against accidental huge runs; they
are ordinary module attributes and may be raised at runtime, e.g.::

    import baxter.config
    baxter.config.ENUM_DEGREE_CAP = 8
"""

# Largest n for which twin-pair enumeration, lattice construction, and
# primitive-element extraction will run without complaint.
ENUM_DEGREE_CAP = 7

# Largest total degree accepted by products and coproducts in the
# class-sum bases (each unit of degree multiplies the expansion size).
PRODUCT_DEGREE_CAP = 6


def check_enum_degree(n):
    if n > ENUM_DEGREE_CAP:
        raise ValueError(
            f"degree {n} exceeds ENUM_DEGREE_CAP={ENUM_DEGREE_CAP}; "
            "raise baxter.config.ENUM_DEGREE_CAP to allow this"
        )


def check_product_degree(n):
    if n > PRODUCT_DEGREE_CAP:
        raise ValueError(
            f"total degree {n} exceeds PRODUCT_DEGREE_CAP={PRODUCT_DEGREE_CAP}; "
            "raise baxter.config.PRODUCT_DEGREE_CAP to allow this"
        )
