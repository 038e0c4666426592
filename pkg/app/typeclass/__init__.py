from app.typeclass.classify import F_enclosure, F_exact, angle_params, classify, critical_interval, t_upper
from app.typeclass.polynomials import (
    DiscriminantSet, T_A_poly, T_A_value, build_F, build_fB, discriminant_set, goldman_mpoly, goldman_value,
)
from app.typeclass.schemas import INF, AngleParams, CriticalInterval, Method, Triple, TypeVerdict, VerdictType
