# app/algebra/__init__.py
from app.algebra.rational import BigRat, to_rat, rat_text
from app.algebra.interval import RatInterval
from app.algebra.upoly import UPoly
from app.algebra.mpoly import MPoly, parse_mpoly, VARIABLE_ORDER
from app.algebra.sturm import SturmChain, sturm_count, isolate_roots, refine_root
from app.algebra.resultant import discriminant, resultant
from app.algebra.algebraic import AlgebraicNumber

__all__ = [
    "BigRat", "to_rat", "rat_text", "RatInterval", "UPoly", "MPoly", "parse_mpoly",
    "VARIABLE_ORDER", "SturmChain", "sturm_count", "isolate_roots", "refine_root",
    "discriminant", "resultant", "AlgebraicNumber",
]
