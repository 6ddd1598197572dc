"""Built-in instance library.

Ships every worked instance the acceptance suite runs, so the CLI can
reproduce the whole suite without external files.  Builders are plain
functions so each run constructs groups afresh; nothing is cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .constructions import (alternating_group, block_subgroup,
                            cgroup_times_group, cyclic_group,
                            cyclic_on_cyclic_blocks, symmetric_group,
                            wreath_over_s3)
from .frobenius import CGroup, build_cyclic_semidirect, build_frobenius_group
from .groups import PermGroup, Subgroup
from .lifting import LiftInstance
from .perms import parse_perm, ppow
from .projective import projective_group


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "lift" | "frobenius" | "frobenius-refusal"
    description: str
    build: Callable


def _s4_instance(c_cycle: str) -> LiftInstance:
    s4 = symmetric_group(4)
    cg = CGroup(s4, parse_perm(c_cycle, 4))
    v4 = Subgroup(s4, [parse_perm("(1 2)(3 4)", 4),
                       parse_perm("(1 3)(2 4)", 4)])
    return LiftInstance.build(cg, v4)


def _trivial_instance(cg: CGroup) -> LiftInstance:
    return LiftInstance.build(cg, Subgroup(cg.group, []))


def _semidirect_kernel_instance(n_c: int, n_k: int,
                                sub_order: int) -> LiftInstance:
    cg = build_frobenius_group(n_c, n_k)
    from .frobenius import is_c_frobenius
    s = is_c_frobenius(cg)
    k = s.kernel_generator
    sub = Subgroup(cg.group, [ppow(k, n_k // sub_order)])
    return LiftInstance.build(cg, sub)


def _blocks_instance(n_c: int, blocks, a_indices) -> LiftInstance:
    cg = cyclic_on_cyclic_blocks(n_c, blocks)
    gens = [cg.group.generators[1 + i] for i in a_indices]
    return LiftInstance.build(cg, Subgroup(cg.group, gens))


def _z2_z3z3_diag() -> LiftInstance:
    cg = cyclic_on_cyclic_blocks(2, [(3, 2), (3, 2)])
    a_gen = cg.group.generators[1]
    b_gen = cg.group.generators[2]
    from .perms import pmul
    diag = pmul(a_gen, b_gen)
    return LiftInstance.build(cg, Subgroup(cg.group, [diag]))


def _z2_z9z3_rank2() -> LiftInstance:
    # C = Z/2 inverting Z/9 x Z/3; kernel = the Z/3 factor
    cg = cyclic_on_cyclic_blocks(2, [(9, 8), (3, 2)])
    return LiftInstance.build(cg, Subgroup(cg.group,
                                           [cg.group.generators[2]]))


def _z2_z9z9_second() -> LiftInstance:
    cg = cyclic_on_cyclic_blocks(2, [(9, 8), (9, 8)])
    return LiftInstance.build(cg, Subgroup(cg.group,
                                           [cg.group.generators[2]]))


def _z2_z9_sub3() -> LiftInstance:
    cg = build_frobenius_group(2, 9)
    from .frobenius import is_c_frobenius
    s = is_c_frobenius(cg)
    return LiftInstance.build(
        cg, Subgroup(cg.group, [ppow(s.kernel_generator, 3)]))


def _mixed_kernel_instance(n_c, blocks, a_indices) -> LiftInstance:
    return _blocks_instance(n_c, blocks, a_indices)


def _f42_x_z5() -> LiftInstance:
    cg = cgroup_times_group(build_frobenius_group(6, 7), cyclic_group(5))
    extra_gen = cg.group.generators[-1]
    return LiftInstance.build(cg, Subgroup(cg.group, [extra_gen]))


def _f20_x_z3() -> LiftInstance:
    cg = cgroup_times_group(build_frobenius_group(4, 5), cyclic_group(3))
    return LiftInstance.build(cg, Subgroup(cg.group,
                                           [cg.group.generators[-1]]))


def _f42_x_z55() -> LiftInstance:
    cg = cgroup_times_group(build_frobenius_group(6, 7), cyclic_group(55))
    return LiftInstance.build(cg, Subgroup(cg.group,
                                           [cg.group.generators[-1]]))


def _wreath_z7() -> LiftInstance:
    cg, product, factors = wreath_over_s3(cyclic_group(7))
    return LiftInstance.build(cg, product)


def _wreath_z5_twisted() -> LiftInstance:
    # the flip inverts the first Z/5 block
    twist = tuple((-x) % 5 for x in range(5))
    cg, product, factors = wreath_over_s3(cyclic_group(5), twist=twist)
    return LiftInstance.build(cg, product)


def _wreath_s3_plain() -> LiftInstance:
    cg, product, factors = wreath_over_s3(symmetric_group(3))
    return LiftInstance.build(cg, product)


def _wreath_s3_twisted() -> LiftInstance:
    cg, product, factors = wreath_over_s3(symmetric_group(3),
                                          twist=parse_perm("(2 3)", 3))
    return LiftInstance.build(cg, product)


def wreath_s3_twisted_parts():
    """The twisted wreath with its factor data, for driving the product
    construction directly."""
    return wreath_over_s3(symmetric_group(3), twist=parse_perm("(2 3)", 3))


def wreath_s3_plain_parts():
    return wreath_over_s3(symmetric_group(3))


def _a5_x_f42() -> LiftInstance:
    a5 = alternating_group(5)
    f42 = build_frobenius_group(6, 7)
    from .groups import direct_product
    g = direct_product(a5, f42.group)
    c = tuple(range(5)) + tuple(v + 5 for v in f42.c)
    cg = CGroup(g, c)
    a_gens = [gen + tuple(range(5, 5 + f42.group.degree))
              for gen in a5.generators]
    return LiftInstance.build(cg, Subgroup(g, a_gens))


def _psl32_x_f42() -> LiftInstance:
    psl = projective_group(3, 2, "PSL").group
    f42 = build_frobenius_group(6, 7)
    from .groups import direct_product
    g = direct_product(psl, f42.group)
    c = tuple(range(7)) + tuple(v + 7 for v in f42.c)
    cg = CGroup(g, c)
    a_gens = [gen + tuple(range(7, 7 + f42.group.degree))
              for gen in psl.generators]
    return LiftInstance.build(cg, Subgroup(g, a_gens))


def _a5_x_f294() -> LiftInstance:
    a5 = alternating_group(5)
    f294 = build_frobenius_group(6, 49)
    from .groups import direct_product
    g = direct_product(a5, f294.group)
    c = tuple(range(5)) + tuple(v + 5 for v in f294.c)
    cg = CGroup(g, c)
    a_gens = [gen + tuple(range(5, 5 + f294.group.degree))
              for gen in a5.generators]
    return LiftInstance.build(cg, Subgroup(g, a_gens))


LIFT_INSTANCES: list[CatalogEntry] = [
    CatalogEntry("s3_trivial", "lift", "S3, trivial kernel",
                 lambda: _trivial_instance(
                     CGroup(symmetric_group(3), parse_perm("(1 2)", 3)))),
    CatalogEntry("z6z7_trivial", "lift", "Z6 x| Z7, trivial kernel",
                 lambda: _trivial_instance(build_frobenius_group(6, 7))),
    CatalogEntry("z6z49_trivial", "lift", "Z6 x| Z49, trivial kernel",
                 lambda: _trivial_instance(build_frobenius_group(6, 49))),
    CatalogEntry("z4z5_trivial", "lift", "Z4 x| Z5, trivial kernel",
                 lambda: _trivial_instance(build_frobenius_group(4, 5))),
    CatalogEntry("z5z11_trivial", "lift", "Z5 x| Z11, trivial kernel",
                 lambda: _trivial_instance(build_frobenius_group(5, 11))),
    CatalogEntry("s4_v4", "lift", "S4 over the Klein four group, C = <(1 2)>",
                 lambda: _s4_instance("(1 2)")),
    CatalogEntry("s4_v4_alt", "lift", "S4 over V4, C = <(2 3)>",
                 lambda: _s4_instance("(2 3)")),
    CatalogEntry("z2_z9_sub3", "lift", "Z2 x| Z9 over the order-3 subgroup",
                 _z2_z9_sub3),
    CatalogEntry("z2_z27_sub3", "lift", "Z2 x| Z27 over the order-3 subgroup",
                 lambda: _semidirect_kernel_instance(2, 27, 3)),
    CatalogEntry("z2_z27_sub9", "lift", "Z2 x| Z27 over the order-9 subgroup",
                 lambda: _semidirect_kernel_instance(2, 27, 9)),
    CatalogEntry("z2_z81_sub27", "lift", "Z2 x| Z81 over the order-27 subgroup",
                 lambda: _semidirect_kernel_instance(2, 81, 27)),
    CatalogEntry("z2_z3z3_first", "lift",
                 "Z2 inverting Z3 x Z3, kernel = first factor",
                 lambda: _blocks_instance(2, [(3, 2), (3, 2)], [0])),
    CatalogEntry("z2_z3z3_diag", "lift",
                 "Z2 inverting Z3 x Z3, kernel = diagonal", _z2_z3z3_diag),
    CatalogEntry("z2_z9z3_rank2", "lift",
                 "Z2 inverting Z9 x Z3, kernel = Z3 factor (rank-2 split)",
                 _z2_z9z3_rank2),
    CatalogEntry("z2_z9z9_second", "lift",
                 "Z2 inverting Z9 x Z9, kernel = second factor",
                 _z2_z9z9_second),
    CatalogEntry("z4_z25_sub5", "lift", "Z4 x| Z25 over the order-5 subgroup",
                 lambda: _semidirect_kernel_instance(4, 25, 5)),
    CatalogEntry("z3_z49_sub7", "lift", "Z3 x| Z49 over the order-7 subgroup",
                 lambda: _semidirect_kernel_instance(3, 49, 7)),
    CatalogEntry("z5_z121_sub11", "lift",
                 "Z5 x| Z121 over the order-11 subgroup",
                 lambda: _semidirect_kernel_instance(5, 121, 11)),
    CatalogEntry("z6_z49_sub7", "lift",
                 "Z6 x| Z49 over the order-7 subgroup (preimage of F42)",
                 lambda: _semidirect_kernel_instance(6, 49, 7)),
    CatalogEntry("z6_z343_sub7", "lift",
                 "Z6 x| Z343 over the order-7 subgroup",
                 lambda: _semidirect_kernel_instance(6, 343, 7)),
    CatalogEntry("z6_z343_sub49", "lift",
                 "Z6 x| Z343 over the order-49 subgroup",
                 lambda: _semidirect_kernel_instance(6, 343, 49)),
    CatalogEntry("z6_z7z13_sub13", "lift",
                 "Z6 x| (Z7 x Z13) over the Z13 part",
                 lambda: _blocks_instance(6, [(7, 3), (13, 4)], [1])),
    CatalogEntry("z6_z7z13_sub7", "lift",
                 "Z6 x| (Z7 x Z13) over the Z7 part",
                 lambda: _blocks_instance(6, [(7, 3), (13, 4)], [0])),
    CatalogEntry("f42_x_z5", "lift",
                 "(Z6 x| Z7) x Z5 over the central Z5", _f42_x_z5),
    CatalogEntry("f20_x_z3", "lift",
                 "(Z4 x| Z5) x Z3 over the central Z3", _f20_x_z3),
    CatalogEntry("f42_x_z55", "lift",
                 "(Z6 x| Z7) x Z55 over the central Z55 (non-minimal kernel)",
                 _f42_x_z55),
    CatalogEntry("wreath_z7_cube", "lift",
                 "S3-top wreath over Z7^3, kernel = the cube", _wreath_z7),
    CatalogEntry("wreath_z5_cube_twisted", "lift",
                 "S3-top wreath over Z5^3 with inverting flip", _wreath_z5_twisted),
    CatalogEntry("wreath_s3_cube_plain", "lift",
                 "S3-top wreath over S3^3 (centralizing stabilizer shape)",
                 _wreath_s3_plain),
    CatalogEntry("wreath_s3_cube_twisted", "lift",
                 "S3-top wreath over S3^3 with inner twist "
                 "(noncentralizing stabilizer shape)", _wreath_s3_twisted),
    CatalogEntry("a5_x_f42", "lift",
                 "A5 x (Z6 x| Z7) over the A5 factor (faithful reduction)",
                 _a5_x_f42),
    CatalogEntry("psl32_x_f42", "lift",
                 "PSL(3,2) x (Z6 x| Z7) over the simple factor", _psl32_x_f42),
    CatalogEntry("a5_x_f294", "lift",
                 "A5 x (Z6 x| Z49) over the A5 factor (subinduction)",
                 _a5_x_f294),
]

FROBENIUS_INSTANCES: list[CatalogEntry] = [
    CatalogEntry("f42", "frobenius", "Z6 x| Z7 acting on 7 points",
                 lambda: build_frobenius_group(6, 7)),
    CatalogEntry("s3_c2", "frobenius", "S3 with C = <(1 2)>",
                 lambda: CGroup(symmetric_group(3), parse_perm("(1 2)", 3))),
    CatalogEntry("z2_z9", "frobenius", "Z2 x| Z9 by inversion",
                 lambda: build_frobenius_group(2, 9)),
    CatalogEntry("d4_refusal", "frobenius-refusal",
                 "dihedral group of order 8: complement order does not "
                 "divide p - 1",
                 lambda: build_cyclic_semidirect(2, 4, 3)),
    CatalogEntry("z6_refusal", "frobenius-refusal",
                 "Z6 with trivial action: unfaithful",
                 lambda: build_cyclic_semidirect(2, 3, 1)),
]


def lift_entry(name: str) -> CatalogEntry:
    for e in LIFT_INSTANCES:
        if e.name == name:
            return e
    raise KeyError(name)


def all_entries() -> list[CatalogEntry]:
    return LIFT_INSTANCES + FROBENIUS_INSTANCES
