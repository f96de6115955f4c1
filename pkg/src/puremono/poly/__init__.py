from puremono.poly.finite import (
    ExtElem,
    ExtensionField,
    ExtPoly,
    ModPoly,
    PrimeField,
    count_monic_irreducibles,
    factor_mod_p,
    factor_over_ext,
)
from puremono.poly.integer import (
    CannotVerify,
    IntPoly,
    discriminant,
    divrem,
    is_squarefree_int,
    resultant,
)
