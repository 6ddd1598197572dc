"""Certificates: canonical JSON transcripts that re-verify from their own
serialized objects.

A certificate carries the command, content digests of the inputs, the
constructed objects in serialized form, and a list of named checks.  The
verifier dispatches each check name to a function that recomputes status
and witness purely from the serialized objects; a certificate verifies
when every recorded check reproduces exactly.  No timestamps or paths ever
enter a certificate, so equal inputs give byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from typing import Callable

from .errors import ParseError, ValidationError
from .frobenius import (CGroup, FrobeniusRefusal, cyclic_power_set,
                        is_c_frobenius, kernel_subgroup)
from .groups import (PermGroup, Subgroup, prime_factors, product_order,
                     subgroup_closure)
from .homs import GroupHom, quotient_by_normal
from .io_formats import (parse_cgroup_data, parse_group_data,
                         parse_subgroup_data, serialize_cgroup,
                         serialize_group, serialize_subgroup)
from .perms import format_perm, parse_perm, pconj, pinv, pmul, porder

VERSION = "frobforge-cert/1"


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=True)


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def certificate(command: list, inputs: dict, objects: dict, checks: list,
                result: str) -> dict:
    return {
        "version": VERSION,
        "command": list(command),
        "inputs": {k: digest(canonical_json(v)) for k, v in inputs.items()},
        "objects": objects,
        "checks": checks,
        "result": result,
    }


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cert-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def structure_witness(structure) -> dict:
    return {
        "c_order": structure.c_order,
        "kernel_generator": format_perm(structure.kernel_generator),
        "kernel_order": structure.kernel_order,
        "primes": {str(p): {"part": part, "exponent": m}
                   for p, (part, m) in sorted(structure.primes.items())},
    }


def check(name: str, status: str, witness: dict) -> dict:
    return {"name": name, "status": status, "witness": witness}


# -- verifiers ---------------------------------------------------------------
# Each verifier recomputes (status, witness) for one check name using only
# the serialized objects.

def _cgroup(objects: dict, key: str = "cgroup") -> CGroup:
    return parse_cgroup_data(objects[key])


def _verify_frobenius_recognition(objects: dict) -> tuple:
    cg = _cgroup(objects)
    s = is_c_frobenius(cg)
    if isinstance(s, FrobeniusRefusal):
        return "refused", {"reason": s.reason, "detail": s.detail}
    return "pass", structure_witness(s)


def _verify_instance_valid(objects: dict) -> tuple:
    cg = _cgroup(objects)
    normal = parse_subgroup_data(objects["normal"], cg.group)
    c_set = frozenset(cyclic_power_set(cg.c, cg.group.degree))
    if len(normal.eset & c_set) != 1:
        return "refused", {"reason": "C meets the normal subgroup"}
    quotient, hom = quotient_by_normal(cg.group, normal)
    s = is_c_frobenius(CGroup(quotient, hom(cg.c)))
    if isinstance(s, FrobeniusRefusal):
        return "refused", {"reason": s.reason}
    return "pass", {
        "normal_order": normal.order,
        "quotient_order": quotient.order,
        "quotient_kernel_order": s.kernel_order,
        "quotient_primes": sorted(s.primes),
    }


def _lift_subgroup(objects: dict, key: str) -> tuple:
    cg = _cgroup(objects)
    sub = parse_subgroup_data(objects[key], cg.group)
    return cg, sub


def _verify_lift_frobenius(objects: dict, key: str = "lift") -> tuple:
    cg, sub = _lift_subgroup(objects, key)
    s = is_c_frobenius(CGroup(sub.group, cg.c))
    if isinstance(s, FrobeniusRefusal):
        return "refused", {"reason": s.reason}
    w = structure_witness(s)
    w["order"] = sub.order
    return "pass", w


def _verify_lift_covers(objects: dict, key: str = "lift") -> tuple:
    cg, sub = _lift_subgroup(objects, key)
    normal = parse_subgroup_data(objects["normal"], cg.group)
    po = product_order(sub.eset, normal.eset)
    status = "pass" if po == cg.group.order else "refused"
    return status, {"product_order": po, "group_order": cg.group.order}


def _verify_lift_contains_c(objects: dict, key: str = "lift") -> tuple:
    cg, sub = _lift_subgroup(objects, key)
    ok = cg.c in sub.eset
    return ("pass" if ok else "refused"), {"contains_c": ok}


def _verify_oracle_agrees(objects: dict) -> tuple:
    return _verify_lift_frobenius(objects, key="oracle_lift")


def _verify_embedding(objects: dict) -> tuple:
    f_cg = _cgroup(objects, "target")
    b_group = parse_group_data(objects["factor_b"])
    phi_b = [parse_perm(s, f_cg.group.degree)
             for s in objects["phi_b_images"]]
    hom_b = GroupHom(b_group, f_cg.group, phi_b)
    s = is_c_frobenius(f_cg)
    if isinstance(s, FrobeniusRefusal):
        return "refused", {"reason": s.reason}
    c_els = cyclic_power_set(f_cg.c, f_cg.group.degree)
    gens = sorted(set(list(hom_b.image_set()) + c_els))
    image = subgroup_closure(f_cg.group, gens)
    comm = pmul(pinv(s.kernel_generator), pconj(s.kernel_generator, f_cg.c))
    witness = {
        "image_order": image.order,
        "target_order": f_cg.group.order,
        "commutator_order": porder(comm),
        "kernel_order": s.kernel_order,
    }
    ok = image.order == f_cg.group.order and \
        porder(comm) == s.kernel_order
    return ("pass" if ok else "refused"), witness


def _verify_pop_intersection(objects: dict) -> tuple:
    f_cg = _cgroup(objects, "target")
    phi2 = [parse_perm(s, f_cg.group.degree) for s in objects["phi2_images"]]
    z6 = parse_group_data(objects["factor_c"])
    hom2 = GroupHom(z6, f_cg.group, phi2)
    inter = f_cg.group.eset & hom2.image_set()
    primes = prime_factors(len(inter))
    return ("pass" if len(primes) > 1 else "refused"), {
        "order": len(inter),
        "distinct_primes": len(primes),
    }


def _verify_pop_not_in_conjugates(objects: dict) -> tuple:
    f_cg = _cgroup(objects, "target")
    d = f_cg.group.degree
    contained = False
    scanned = 0
    for key in ("phi1_images", "phi2_images"):
        images = [parse_perm(s, d) for s in objects[key]]
        src = parse_group_data(objects["factor_b" if key == "phi1_images"
                                       else "factor_c"])
        hom = GroupHom(src, f_cg.group, images)
        image = hom.image_set()
        for g in f_cg.group.elements:
            scanned += 1
            conj = frozenset(pconj(x, g) for x in image)
            if f_cg.group.eset <= conj:
                contained = True
    return ("pass" if not contained else "refused"), {
        "scanned": scanned, "contained": contained}


def _verify_pop_injective(objects: dict) -> tuple:
    f_cg = _cgroup(objects, "target")
    d = f_cg.group.degree
    orders = {}
    ok = True
    for key, src_key in (("phi1_images", "factor_b"),
                         ("phi2_images", "factor_c")):
        src = parse_group_data(objects[src_key])
        hom = GroupHom(src, f_cg.group,
                       [parse_perm(s, d) for s in objects[key]])
        orders[key] = len(hom.image_set())
        ok = ok and orders[key] == src.order
    return ("pass" if ok else "refused"), {
        "image_orders": orders,
        "factor_orders": {"phi1_images": parse_group_data(
            objects["factor_b"])["degree"] if False else
            parse_group_data(objects["factor_b"]).order,
            "phi2_images": parse_group_data(objects["factor_c"]).order},
    }


def _verify_group_order(objects: dict) -> tuple:
    key = "target" if "target" in objects else "cgroup"
    data = objects[key]
    group = parse_group_data(data)
    return "pass", {
        "order": group.order,
        "factorization": {str(p): _ppart(group.order, p)
                          for p in prime_factors(group.order)},
    }


def _ppart(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def _verify_tower_level(objects: dict, index: int) -> tuple:
    from .io_formats import parse_tower_data
    tower = parse_tower_data(objects["tower"])
    level_cg = tower.levels[index]
    sub = parse_subgroup_data(objects[f"level_{index}"], level_cg.group)
    s = is_c_frobenius(CGroup(sub.group, level_cg.c))
    if isinstance(s, FrobeniusRefusal):
        return "refused", {"reason": s.reason}
    witness = {
        "order": sub.order,
        "kernel_primes": sorted(s.primes),
    }
    if index > 0:
        hom = tower.maps[index - 1]
        below = parse_subgroup_data(objects[f"level_{index - 1}"],
                                    tower.levels[index - 1].group)
        image = {hom(x) for x in sub.eset}
        witness["maps_onto_below"] = image == set(below.eset)
        witness["kernel_meet"] = len(sub.eset & hom.kernel_set())
        if not witness["maps_onto_below"]:
            return "refused", witness
    return "pass", witness


CHECK_VERIFIERS: dict[str, Callable] = {
    "frobenius-recognition": lambda o, c: _verify_frobenius_recognition(o),
    "instance-valid": lambda o, c: _verify_instance_valid(o),
    "lift-frobenius": lambda o, c: _verify_lift_frobenius(o),
    "lift-covers": lambda o, c: _verify_lift_covers(o),
    "lift-contains-c": lambda o, c: _verify_lift_contains_c(o),
    "oracle-agrees": lambda o, c: _verify_oracle_agrees(o),
    "oracle-covers": lambda o, c: _verify_lift_covers(o, key="oracle_lift"),
    "embedding-generates": lambda o, c: _verify_embedding(o),
    "pop-order": lambda o, c: _verify_group_order(o),
    "pop-intersection": lambda o, c: _verify_pop_intersection(o),
    "pop-not-in-factor-conjugate":
        lambda o, c: _verify_pop_not_in_conjugates(o),
    "pop-embeddings-injective": lambda o, c: _verify_pop_injective(o),
    "tower-level": lambda o, c: _verify_tower_level(o, c["witness"]["index"]),
}


def verify_certificate(cert: dict) -> dict:
    """Re-run every check from the serialized objects; returns a report
    with per-check reproduction flags."""
    if cert.get("version") != VERSION:
        raise ValidationError(f"unsupported certificate version "
                              f"{cert.get('version')!r}")
    objects = cert["objects"]
    report = {"reproduced": True, "checks": []}
    for chk in cert["checks"]:
        name = chk["name"]
        fn = CHECK_VERIFIERS.get(name)
        if fn is None:
            raise ValidationError(f"unknown check {name!r}")
        status, witness = fn(objects, chk)
        if name == "tower-level":
            witness["index"] = chk["witness"]["index"]
        ok = status == chk["status"] and witness == chk["witness"]
        report["checks"].append({"name": name, "reproduced": ok})
        if not ok:
            report["reproduced"] = False
            report["checks"][-1]["expected"] = \
                {"status": chk["status"], "witness": chk["witness"]}
            report["checks"][-1]["got"] = \
                {"status": status, "witness": witness}
    return report
