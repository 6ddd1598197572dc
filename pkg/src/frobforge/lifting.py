"""Lifting a Frobenius quotient through a finite normal subgroup.

Given G with normal A, C cap A = 1 and G/A Frobenius over C, a subgroup H
with the same Frobenius structure and H*A = G is produced.  The recursion
follows a fixed cascade: trivial kernel, descent to a minimal normal
subgroup, the elementary abelian construction, the prime-power Sylow
shortcut, the faithful-action reduction, the product construction over
transitively permuted simple factors, and finally an element-scanning
oracle (which also serves as the independent cross-check for everything
else).  Every step asserts its postconditions and strict descent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .caps import get_caps
from .errors import (CapExceeded, HypothesisViolated, InternalInconsistency,
                     NotCEpimorphism, NotFound, ValidationError)
from .frobenius import (CGroup, FrobeniusRefusal, FrobeniusStructure,
                        cyclic_power_set, is_c_frobenius, kernel_subgroup)
from .groups import (PermGroup, Subgroup, centralizer_of_set, cyclic_subgroup,
                     intersection, is_abelian, is_normal, is_solvable,
                     minimal_normal_subgroups, normalizer, p_part,
                     prime_factors, product_order, subgroup_closure,
                     sylow_containing)
from .homs import GroupHom, preimage_subgroup, quotient_by_normal
from .intravariance import (c_compatible_representatives,
                            product_intravariant_subgroup)
from .perms import (Perm, format_perm, identity, pconj, pinv, pmul, porder,
                    ppow)


@dataclass(frozen=True)
class LiftInstance:
    cgroup: CGroup
    normal: Subgroup
    quotient: PermGroup
    quotient_hom: GroupHom
    quotient_cgroup: CGroup
    quotient_structure: FrobeniusStructure

    @classmethod
    def build(cls, cgroup: CGroup, normal: Subgroup) -> "LiftInstance":
        group = cgroup.group
        if len(normal.eset & cgroup.c_set()) != 1:
            raise HypothesisViolated("C meets the normal subgroup")
        quotient, hom = quotient_by_normal(group, normal)
        cbar = hom(cgroup.c)
        if porder(cbar) != cgroup.c_order:
            raise HypothesisViolated("C does not embed into the quotient")
        qcg = CGroup(quotient, cbar)
        structure = is_c_frobenius(qcg)
        if isinstance(structure, FrobeniusRefusal):
            raise HypothesisViolated(
                f"quotient is not C-Frobenius: {structure.reason}")
        return cls(cgroup=cgroup, normal=normal, quotient=quotient,
                   quotient_hom=hom, quotient_cgroup=qcg,
                   quotient_structure=structure)


@dataclass(frozen=True)
class LiftResult:
    subgroup: Subgroup
    structure: FrobeniusStructure
    trace: tuple  # strategy steps, outermost first


def revalidate(instance: LiftInstance, result: LiftResult) -> dict:
    """Independent re-check of a lift: H is C-Frobenius containing the
    distinguished C and H*A covers G."""
    group = instance.cgroup.group
    h = result.subgroup
    checks = {}
    checks["contains_c"] = instance.cgroup.c in h.eset
    sub_cg = CGroup(h.group, instance.cgroup.c)
    s = is_c_frobenius(sub_cg)
    checks["frobenius"] = not isinstance(s, FrobeniusRefusal)
    if checks["frobenius"]:
        checks["kernel_order"] = s.kernel_order == result.structure.kernel_order
    checks["covers"] = product_order(h.eset, instance.normal.eset) == group.order
    checks["ok"] = all(checks.values())
    return checks


# -- the recursion ---------------------------------------------------------

def lift_frobenius(instance: LiftInstance, oracle_cap: Optional[int] = None) -> LiftResult:
    group = instance.cgroup.group
    trace: list = []
    h_els = _lift(group, instance.cgroup.c, instance.normal, trace,
                  oracle_cap=oracle_cap)
    sub = Subgroup.from_elements(group, h_els, name="H")
    s = is_c_frobenius(CGroup(sub.group, instance.cgroup.c))
    if isinstance(s, FrobeniusRefusal):
        raise InternalInconsistency(f"lift is not C-Frobenius: {s.reason}")
    if product_order(sub.eset, instance.normal.eset) != group.order:
        raise InternalInconsistency("lift does not cover the group")
    return LiftResult(subgroup=sub, structure=s, trace=tuple(trace))


def _descend(group: PermGroup, c: Perm, a_sub: Subgroup, trace: list,
             parent_size: tuple, oracle_cap) -> frozenset:
    """Recursive call with the strict-descent assertion."""
    if (group.order, a_sub.order) >= parent_size:
        raise InternalInconsistency(
            f"recursion did not descend: {(group.order, a_sub.order)} from "
            f"{parent_size}")
    return _lift(group, c, a_sub, trace, oracle_cap=oracle_cap)


def _lift(group: PermGroup, c: Perm, a_sub: Subgroup, trace: list,
          oracle_cap) -> frozenset:
    """Returns the element set of a valid lift H inside ``group``."""
    size = (group.order, a_sub.order)
    if a_sub.order == 1:
        trace.append({"step": "trivial-kernel", "group_order": group.order})
        return group.eset

    minimals = minimal_normal_subgroups(group, inside=a_sub)
    b_sub = minimals[0]
    if b_sub.order != a_sub.order:
        # Part A: reduce to a minimal normal subgroup
        trace.append({"step": "minimal-normal-descent",
                      "b_order": b_sub.order, "a_order": a_sub.order})
        quotient, hom = quotient_by_normal(group, b_sub)
        cbar = hom(c)
        abar = Subgroup.from_elements(quotient,
                                      {hom(x) for x in a_sub.eset})
        hbar = _descend(quotient, cbar, abar, trace, size, oracle_cap)
        h0 = preimage_subgroup(hom, frozenset(hbar))
        if product_order(h0.eset, a_sub.eset) != group.order:
            raise InternalInconsistency("intermediate lift misses the group")
        b_in_h0 = Subgroup.from_elements(h0.group, b_sub.eset)
        return _descend(h0.group, c, b_in_h0, trace, size, oracle_cap)

    # A is minimal normal
    a_group = a_sub.group
    if is_abelian(a_group):
        trace.append({"step": "elementary-abelian", "a_order": a_sub.order})
        return _lift_elementary_abelian(group, c, a_sub, trace, oracle_cap)

    c_order = porder(c)
    if len(prime_factors(c_order)) == 1:
        return _prime_power_path(group, c, a_sub, trace, size, oracle_cap)

    # Part C: make the action on A faithful
    cent = centralizer_of_set(group, a_sub.elements)
    if cent.order > 1:
        return _faithful_reduction(group, c, a_sub, cent, trace, size,
                                   oracle_cap)

    return _product_cases(group, c, a_sub, trace, size, oracle_cap)


# -- elementary abelian kernel (constructive) -------------------------------

def _lift_elementary_abelian(group: PermGroup, c: Perm, a_sub: Subgroup,
                             trace: list, oracle_cap) -> frozenset:
    p_primes = prime_factors(a_sub.order)
    if len(p_primes) != 1:
        raise HypothesisViolated("kernel is not an elementary abelian p-group")
    p = p_primes[0]
    for x in a_sub.elements:
        if x != identity(group.degree) and porder(x) != p:
            raise HypothesisViolated("kernel has exponent larger than p")
    quotient, hom = quotient_by_normal(group, a_sub)
    cbar = hom(c)
    qcg = CGroup(quotient, cbar)
    s = is_c_frobenius(qcg)
    if isinstance(s, FrobeniusRefusal):
        raise HypothesisViolated(f"quotient not Frobenius: {s.reason}")
    kbar = kernel_subgroup(qcg, s)
    m_sub = preimage_subgroup(hom, kbar.eset)  # M with M/A = K

    # does K act nontrivially on A?
    k_lift = min(x for x in m_sub.elements
                 if hom(x) == s.kernel_generator)
    k_acts_trivially = all(pconj(a, k_lift) == a for a in a_sub.elements)

    if not k_acts_trivially:
        return _elem_abelian_nontrivial(group, c, a_sub, m_sub, s, hom, p,
                                        trace)
    return _elem_abelian_trivial(group, c, a_sub, m_sub, s, hom, p, trace)


def _elem_abelian_nontrivial(group, c, a_sub, m_sub, s, hom, p, trace):
    """Kernel acts nontrivially: some Sylow part of M is a complement seed."""
    r_found = None
    for r in sorted(s.primes):
        part = s.primes[r][0]
        k_r_gen_bar = ppow(s.kernel_generator, s.kernel_order // part)
        m_r = sylow_containing(m_sub.group, r)
        fixed = [a for a in a_sub.elements
                 if all(pconj(a, x) == a for x in m_r.generators)]
        if len(fixed) == 1:
            r_found = (r, m_r)
            break
        if len(fixed) != a_sub.order and len(fixed) != 1:
            raise InternalInconsistency(
                "fixed points of a normal Sylow action form a proper "
                "nontrivial submodule of a minimal normal subgroup")
    if r_found is None:
        raise InternalInconsistency(
            "kernel acts nontrivially but every Sylow part acts trivially")
    r, m_r = r_found
    n_a = [a for a in a_sub.elements
           if frozenset(pconj(x, a) for x in m_r.eset) == m_r.eset]
    if len(n_a) != 1:
        raise InternalInconsistency("N_A(M_r) is nontrivial")
    n_g = normalizer(group, m_r)
    if product_order(n_g.eset, a_sub.eset) != group.order:
        raise InternalInconsistency("G != A * N_G(M_r)")
    if len(n_g.eset & a_sub.eset) != 1:
        raise InternalInconsistency("N_G(M_r) meets A nontrivially")
    # A is a free module over <c>: order p^(|C| * s) and fixed-space sizes
    c_order = porder(c)
    dim = 0
    n = a_sub.order
    while n > 1:
        n //= p
        dim += 1
    if dim % c_order != 0:
        raise InternalInconsistency("kernel dimension is not |C| * s")
    rank = dim // c_order
    cpows = cyclic_power_set(c, group.degree)
    for cp in cpows:
        if cp == identity(group.degree):
            continue
        fix = sum(1 for a in a_sub.elements if pconj(a, cp) == a)
        expected = p ** (rank * c_order // porder(cp))
        if fix != expected:
            raise InternalInconsistency(
                "fixed spaces do not match a free module")
    # conjugate C into the complement: scan a in A for C^a <= N_G(M_r)
    c_set = set(cpows)
    a_found = None
    for a in a_sub.elements:
        if all(pconj(x, a) in n_g.eset for x in c_set):
            a_found = a
            break
    if a_found is None:
        raise InternalInconsistency(
            "no conjugating element (complement conjugacy violated)")
    h_els = frozenset(pconj(x, pinv(a_found)) for x in n_g.eset)
    trace.append({"step": "elementary-abelian-branch1", "prime": r,
                  "conjugator": format_perm(a_found)})
    if c not in h_els:
        raise InternalInconsistency("complement misses C after conjugation")
    return h_els


def _elem_abelian_trivial(group, c, a_sub, m_sub, s, hom, p, trace):
    """Kernel central on A: M is abelian, build cyclic pieces per prime."""
    m_group = m_sub.group
    if not is_abelian(m_group):
        raise InternalInconsistency("M must be abelian here")
    c_order = porder(c)
    l_gens = []
    branch_notes = []
    for r in sorted(s.primes):
        m_r_els = sorted(x for x in m_sub.elements
                         if porder(x) in (1,) or
                         all(q == r for q in prime_factors(porder(x))))
        m_r = Subgroup.from_elements(group, m_r_els)
        max_order = max(porder(x) for x in m_r.elements)
        if max_order == m_r.order:
            # cyclic Sylow part: take it whole
            gen = min(x for x in m_r.elements if porder(x) == max_order)
            l_gens.append(gen)
            branch_notes.append({"prime": r, "kind": "cyclic",
                                 "order": m_r.order})
            continue
        if r != p:
            raise InternalInconsistency(
                "non-cyclic Sylow part away from the kernel prime")
        # rank-2 case: split off a cyclic complement through the
        # p-th power subgroup
        if a_sub.order != p:
            raise InternalInconsistency("kernel must be one-dimensional here")
        phi_els = sorted({ppow(x, p) for x in m_r.elements})
        phi_set = frozenset(phi_els)
        # quotient V = M_p / phi: rank-2 vector space over GF(p)
        cosets: dict[Perm, int] = {}
        reps: list[Perm] = []
        for x in m_r.elements:
            if x in cosets:
                continue
            idx = len(reps)
            reps.append(x)
            for ph in phi_els:
                cosets[pmul(ph, x)] = idx
        if len(reps) != p * p:
            raise InternalInconsistency("Frattini quotient is not rank 2")
        a_gen = min(x for x in a_sub.elements if x != identity(group.degree))
        abar = cosets[a_gen]
        if abar == cosets[identity(group.degree)]:
            raise InternalInconsistency("kernel image in the Frattini "
                                        "quotient vanished")
        # basis for V: e1 = first nontrivial coset, coordinates by scanning
        e1_idx = next(cosets[x] for x in m_r.elements
                      if cosets[x] != cosets[identity(group.degree)])
        e1_rep = reps[e1_idx]
        span_e1 = {cosets[identity(group.degree)]}
        cur = identity(group.degree)
        for _ in range(p - 1):
            cur = pmul(cur, e1_rep)
            span_e1.add(cosets[cur])
        e2_idx = next(cosets[x] for x in m_r.elements
                      if cosets[x] not in span_e1)
        e2_rep = reps[e2_idx]
        # coordinates of every coset
        coords = {}
        x_run = identity(group.degree)
        for i in range(p):
            y_run = x_run
            for j in range(p):
                coords[cosets[y_run]] = (i, j)
                y_run = pmul(y_run, e2_rep)
            x_run = pmul(x_run, e1_rep)
        inv_coords = {v: k for k, v in coords.items()}
        # the line of abar and the c-action on V
        def line_of(vec):
            pts = set()
            for t in range(p):
                pts.add(((vec[0] * t) % p, (vec[1] * t) % p))
            return frozenset(pts)
        abar_vec = coords[abar]
        a_line = line_of(abar_vec)
        c_on_v = {}
        for idx, rep in enumerate(reps):
            c_on_v[coords[cosets[rep]]] = coords[cosets[pconj(rep, c)]]
        chosen = None
        for vec in sorted(inv_coords):
            if vec == (0, 0):
                continue
            if vec != min(v for v in line_of(vec) if v != (0, 0)):
                continue  # one spanning vector per line
            line = line_of(vec)
            if line == a_line:
                continue
            if {c_on_v[v] for v in line} == set(line):
                chosen = line
                break
        if chosen is None:
            raise InternalInconsistency("no invariant complement line")
        # preimage of the chosen line is the cyclic C-invariant complement
        w_els = sorted(x for x in m_r.elements
                       if coords[cosets[x]] in chosen)
        max_w = max(porder(x) for x in w_els)
        if max_w != len(w_els):
            raise InternalInconsistency("preimage of the line is not cyclic")
        gen = min(x for x in w_els if porder(x) == max_w)
        l_gens.append(gen)
        branch_notes.append({"prime": r, "kind": "frattini-split",
                             "order": max_w})
    for gen in l_gens:
        if pconj(gen, c) not in set(cyclic_power_set(gen, group.degree)):
            raise InternalInconsistency("cyclic piece is not C-invariant")
    h_sub = subgroup_closure(group, [c] + l_gens, name="H")
    trace.append({"step": "elementary-abelian-branch2",
                  "pieces": branch_notes})
    if product_order(h_sub.eset, a_sub.eset) != group.order:
        raise InternalInconsistency("branch-2 lift misses the group")
    return h_sub.eset


# -- prime power shortcut ----------------------------------------------------

def _prime_power_path(group, c, a_sub, trace, size, oracle_cap) -> frozenset:
    """|C| a prime power: C normalizes a Sylow subgroup of A; recurse into
    its normalizer (Frattini gives G = A * N)."""
    r = prime_factors(porder(c))[0]
    c_sub = cyclic_subgroup(group, c)
    from .intravariance import normalized_sylow
    if a_sub.order % r == 0:
        u = normalized_sylow(group, a_sub, c_sub)
        prime_used = r
    else:
        p = min(prime_factors(a_sub.order))
        u = normalized_sylow(group, a_sub, c_sub, p=p)
        prime_used = p
    n_g = normalizer(group, u)
    if c not in n_g.eset:
        raise InternalInconsistency("C does not normalize the Sylow piece")
    if product_order(n_g.eset, a_sub.eset) != group.order:
        raise InternalInconsistency("Frattini cover failed")
    if n_g.order == group.order:
        raise InternalInconsistency(
            "Sylow subgroup of a semisimple kernel cannot be normal")
    trace.append({"step": "prime-power-sylow", "prime": prime_used,
                  "sylow_order": u.order, "normalizer_order": n_g.order})
    a_next = intersection(group, Subgroup.from_elements(group, n_g.eset),
                          a_sub)
    a_in_n = Subgroup.from_elements(n_g.group, a_next.eset)
    return _descend(n_g.group, c, a_in_n, trace, size, oracle_cap)


# -- faithful-action reduction (Part C) --------------------------------------

def _faithful_reduction(group, c, a_sub, cent, trace, size, oracle_cap):
    minimals = minimal_normal_subgroups(group, inside=cent)
    b_sub = minimals[0]
    if len(b_sub.eset & a_sub.eset) != 1:
        raise InternalInconsistency("central minimal normal meets A")
    if not is_solvable(b_sub.group):
        raise InternalInconsistency("B embeds in a Frobenius group, "
                                    "must be solvable")
    ab_els = frozenset(pmul(a, b) for a in a_sub.eset for b in b_sub.eset)
    ab_sub = Subgroup.from_elements(group, ab_els)
    c_set = frozenset(cyclic_power_set(c, group.degree))
    if len(ab_sub.eset & c_set) != 1:
        raise HypothesisViolated("C meets A*B")
    cab = subgroup_closure(group, [c] + list(ab_sub.generators))
    if cab.order == group.order:
        # G = ABC: a solvable core already covers the group
        g0 = subgroup_closure(group, [c] + list(b_sub.generators))
        trace.append({"step": "faithful-reduction", "case": "G=ABC",
                      "b_order": b_sub.order, "g0_order": g0.order})
    else:
        quotient, hom = quotient_by_normal(group, b_sub)
        cbar = hom(c)
        ab_bar = Subgroup.from_elements(quotient,
                                        {hom(x) for x in ab_els})
        hbar = _descend(quotient, cbar, ab_bar, trace, size, oracle_cap)
        g0 = preimage_subgroup(hom, frozenset(hbar))
        trace.append({"step": "faithful-reduction", "case": "subinduction",
                      "b_order": b_sub.order, "g0_order": g0.order})
    if not is_solvable(g0.group):
        raise InternalInconsistency("reduced group is not solvable")
    if product_order(g0.eset, a_sub.eset) != group.order:
        raise InternalInconsistency("reduced group misses the cover")
    a0 = intersection(group, g0, a_sub)
    if a0.order >= a_sub.order:
        raise InternalInconsistency("faithful reduction did not shrink A")
    a_in_g0 = Subgroup.from_elements(g0.group, a0.eset)
    return _descend(g0.group, c, a_in_g0, trace, size, oracle_cap)


# -- product construction (Cases I and III) ----------------------------------

def classify_product_case(c1_centralizes: bool, c1_trivial: bool,
                          k1_trivial: bool) -> str:
    if c1_centralizes or c1_trivial:
        return "I"
    if not k1_trivial:
        return "II"
    return "III"


def _product_cases(group, c, a_sub, trace, size, oracle_cap,
                   factors=None) -> frozenset:
    """Cases I/III over a normal subgroup that is a direct product of
    transitively permuted nonabelian factors.  The cascade derives the
    factors as the minimal normal subgroups of a semisimple kernel; a
    caller driving the construction directly may pass its own
    decomposition (validated downstream)."""
    if factors is None:
        factors = minimal_normal_subgroups(a_sub.group)
    if any(is_abelian(f.group) for f in factors):
        raise InternalInconsistency("expected nonabelian factors")
    quotient, hom = quotient_by_normal(group, a_sub)
    cbar = hom(c)
    qcg = CGroup(quotient, cbar)
    s = is_c_frobenius(qcg)
    if isinstance(s, FrobeniusRefusal):
        raise HypothesisViolated(s.reason)
    kbar_set = kernel_subgroup(qcg, s).eset
    cbar_set = frozenset(cyclic_power_set(cbar, quotient.degree))
    # the stabilizer of a factor must have the shape C1*K1 for some factor
    base = None
    for f in factors:
        n_f = normalizer(group, f)
        fbar = frozenset(hom(x) for x in n_f.eset)
        c1bar = fbar & cbar_set
        k1bar = fbar & kbar_set
        if {pmul(a, b) for a in c1bar for b in k1bar} == set(fbar):
            base = (f, n_f, c1bar, k1bar)
            break
    if base is None:
        raise InternalInconsistency(
            "no factor has a C1*K1 stabilizer (orbit lemma violated)")
    f0, n_f0, c1bar, k1bar = base
    c_set = frozenset(cyclic_power_set(c, group.degree))
    c1_els = sorted(x for x in c_set if hom(x) in c1bar)
    c1_centralizes = all(pconj(q, x) == q for x in c1_els
                         for q in f0.generators)
    case = classify_product_case(c1_centralizes, len(c1bar) == 1,
                                 len(k1bar) == 1)
    if case == "II":
        trace.append({"step": "case-II-oracle",
                      "reason": "almost-simple stabilizer with C1, K1 "
                                "both nontrivial"})
        return _oracle_scan(group, c, a_sub, trace, oracle_cap)
    if case == "I":
        p0 = min(prime_factors(f0.order))
        u1 = Subgroup.from_elements(group,
                                    sylow_containing(f0.group, p0).eset)
        base_factor, grouped = f0, list(factors)
        trace.append({"step": "case-I", "factor_order": f0.order,
                      "sylow_prime": p0})
    else:
        # Case III: regroup the factors into products over CA-orbits
        ca_gens = [c] + list(a_sub.generators)
        grouped = []
        used: set = set()
        for f in factors:
            if f.eset in used:
                continue
            orbit = {f.eset}
            frontier = [f.eset]
            while frontier:
                cur = frontier.pop()
                for g in ca_gens:
                    img = frozenset(pconj(x, g) for x in cur)
                    if img not in orbit:
                        orbit.add(img)
                        frontier.append(img)
            used |= orbit
            members = sorted(x for o in orbit for x in o)
            grouped.append(Subgroup.from_elements(
                group, subgroup_closure(group, members).eset))
        base_factor = next(g2 for g2 in grouped if f0.eset <= g2.eset)
        u1_els = [x for x in base_factor.elements if pconj(x, c) == x]
        u1 = Subgroup.from_elements(group, u1_els)
        if u1.order == 1 or u1.order == base_factor.order:
            raise InternalInconsistency(
                "centralizer piece is trivial or everything")
        trace.append({"step": "case-III", "factor_order": base_factor.order,
                      "u1_order": u1.order})
    ordered = [base_factor] + sorted(
        (f for f in grouped if f.eset != base_factor.eset),
        key=lambda s2: s2.elements)
    reps = c_compatible_representatives(group, a_sub, ordered, c, u1)
    u, cert = product_intravariant_subgroup(group, a_sub, ordered, u1, reps)
    if any(pconj(x, c) not in u.eset for x in u.generators):
        raise InternalInconsistency("product subgroup is not C-invariant")
    n_u = normalizer(group, u)
    if product_order(n_u.eset, a_sub.eset) != group.order:
        raise InternalInconsistency("intravariance cover failed")
    if n_u.order == group.order:
        raise InternalInconsistency("product subgroup must not be normal")
    a_next = intersection(group, Subgroup.from_elements(group, n_u.eset),
                          a_sub)
    a_in_n = Subgroup.from_elements(n_u.group, a_next.eset)
    return _descend(n_u.group, c, a_in_n, trace, size, oracle_cap)


# -- the oracle --------------------------------------------------------------

def _oracle_scan(group: PermGroup, c: Perm, a_sub: Subgroup, trace: list,
                 oracle_cap) -> frozenset:
    cap = oracle_cap if oracle_cap is not None else get_caps().oracle
    if group.order > cap:
        raise CapExceeded(f"oracle scan capped at order {cap}")
    c_pows = cyclic_power_set(c, group.degree)
    c_set = frozenset(c_pows)
    idp = identity(group.degree)
    for k in group.elements:
        if k == idp:
            continue
        k_pows = cyclic_power_set(k, group.degree)
        k_set = frozenset(k_pows)
        if len(c_set & k_set) != 1:
            continue
        if pconj(k, c) not in k_set:
            continue
        # fixed-point-free action of C on <k>
        fpf = True
        for cp in c_pows:
            if cp == idp:
                continue
            if any(pconj(x, cp) == x for x in k_pows if x != idp):
                fpf = False
                break
        if not fpf:
            continue
        h_els = frozenset(pmul(a, b) for a in c_pows for b in k_pows)
        if len(h_els) != len(c_pows) * len(k_pows):
            continue
        if product_order(h_els, a_sub.eset) != group.order:
            continue
        trace.append({"step": "oracle", "kernel_generator": format_perm(k)})
        return h_els
    raise NotFound("oracle found no lift; instance hypotheses must be wrong")


def oracle_lift(instance: LiftInstance,
                oracle_cap: Optional[int] = None) -> LiftResult:
    """Element-scanning fallback and cross-check: the first k in element
    order with <k> normalized by C, meeting C trivially, acted on without
    fixed points, and C<k>A = G."""
    group = instance.cgroup.group
    trace: list = []
    h_els = _oracle_scan(group, instance.cgroup.c, instance.normal, trace,
                         oracle_cap)
    sub = Subgroup.from_elements(group, h_els, name="H")
    s = is_c_frobenius(CGroup(sub.group, instance.cgroup.c))
    if isinstance(s, FrobeniusRefusal):
        raise InternalInconsistency(f"oracle lift not Frobenius: {s.reason}")
    return LiftResult(subgroup=sub, structure=s, trace=tuple(trace))


# -- fiber products ----------------------------------------------------------

@dataclass(frozen=True)
class FiberProductResult:
    fiber: CGroup
    lifted: Subgroup
    structure: FrobeniusStructure
    proj1: GroupHom
    proj2: GroupHom


def _validate_c_epi(hom: GroupHom, src: CGroup, dst: CGroup):
    if not hom.is_surjective():
        raise NotCEpimorphism("map is not surjective")
    if hom(src.c) != dst.c:
        raise NotCEpimorphism("map does not respect the distinguished C")


def fiber_product_frobenius(rho1: GroupHom, cg1: CGroup,
                            rho2: GroupHom, cg2: CGroup,
                            cg3: CGroup) -> FiberProductResult:
    """F1 x_F3 F2 with a Frobenius subgroup mapping onto F1: per prime the
    kernel generator of F1 is matched with a compatible generator on the F2
    side (trivial exactly when its image dies in F3)."""
    for cg in (cg1, cg2, cg3):
        s = is_c_frobenius(cg)
        if isinstance(s, FrobeniusRefusal):
            raise NotCEpimorphism(f"input group not C-Frobenius: {s.reason}")
    _validate_c_epi(rho1, cg1, cg3)
    _validate_c_epi(rho2, cg2, cg3)
    s1 = is_c_frobenius(cg1)
    s2 = is_c_frobenius(cg2)
    d1 = cg1.group.degree
    d2 = cg2.group.degree
    by_image: dict[Perm, list] = {}
    for y in cg2.group.elements:
        by_image.setdefault(rho2(y), []).append(y)
    els = []
    for x in cg1.group.elements:
        z = rho1(x)
        for y in by_image[z]:
            els.append(x + tuple(v + d1 for v in y))
    fiber_group = PermGroup.from_elements(d1 + d2, els, name="fiber")
    c_f = cg1.c + tuple(v + d1 for v in cg2.c)
    fiber = CGroup(fiber_group, c_f)
    proj1 = GroupHom(fiber_group, cg1.group,
                     [e[:d1] for e in fiber_group.generators],
                     _map={e: e[:d1] for e in fiber_group.elements})
    proj2 = GroupHom(fiber_group, cg2.group,
                     [tuple(v - d1 for v in e[d1:])
                      for e in fiber_group.generators],
                     _map={e: tuple(v - d1 for v in e[d1:])
                           for e in fiber_group.elements})

    k_parts = []
    for p in sorted(s1.primes):
        part1 = s1.primes[p][0]
        k1 = ppow(s1.kernel_generator, s1.kernel_order // part1)
        k3 = rho1(k1)
        if k3 == identity(cg3.group.degree):
            k2 = identity(cg2.group.degree)
        else:
            part2 = p_part(s2.kernel_order, p)
            k2gen = ppow(s2.kernel_generator, s2.kernel_order // part2)
            k2 = None
            cur = k2gen
            for i in range(1, part2 + 1):
                if rho2(cur) == k3:
                    k2 = cur
                    break
                cur = pmul(cur, k2gen)
            if k2 is None:
                raise InternalInconsistency(
                    "no compatible kernel element on the second leg")
            if porder(k2) != part2:
                raise InternalInconsistency(
                    "matched element does not generate the p-part")
        k = k1 + tuple(v + d1 for v in k2)
        k_parts.append(k)
        kset = frozenset(cyclic_power_set(k, d1 + d2))
        if pconj(k, c_f) not in kset:
            raise InternalInconsistency("C does not normalize the piece")
    lifted = subgroup_closure(fiber_group, [c_f] + k_parts, name="H")
    s_l = is_c_frobenius(CGroup(lifted.group, c_f))
    if isinstance(s_l, FrobeniusRefusal):
        raise InternalInconsistency(f"fiber lift not Frobenius: {s_l.reason}")
    image1 = {proj1(x) for x in lifted.eset}
    if len(image1) != cg1.group.order:
        raise InternalInconsistency("fiber lift does not map onto F1")
    return FiberProductResult(fiber=fiber, lifted=lifted, structure=s_l,
                              proj1=proj1, proj2=proj2)
