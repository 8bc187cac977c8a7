"""Command surface: parse code / sigma / GQC / group files, run the
formula-based checks with an oracle cross-check, and reproduce the worked
examples end to end.

Exit codes: 0 for success or a true verdict, 1 for a false verdict, 2 for
input errors or a formula/oracle discrepancy.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import abelian, codes, gqc, linalg, oracle, poly
from .cyclotomic import CyclotomicContext, gamma_partition
from .errors import SigmaLcdError, UnknownSuite
from .field import field as make_field
from .formats import (
    dump_code,
    dump_sigma,
    field_str,
    parse_code,
    parse_field,
    parse_gqc,
    parse_gqc_raw,
    parse_product_spec,
    poly_str,
    sigma_from_spec,
)


@dataclass
class RunReport:
    command: str
    inputs: dict = dc_field(default_factory=dict)
    result: dict = dc_field(default_factory=dict)
    verification: str | None = None
    elapsed: float = 0.0

    def machine_lines(self) -> list[str]:
        out = [f"command={self.command}"]
        for k, v in self.inputs.items():
            out.append(f"input.{k}={_flat(v)}")
        for k, v in self.result.items():
            out.append(f"{k}={_flat(v)}")
        if self.verification is not None:
            out.append(f"verification={self.verification}")
        out.append(f"elapsed={self.elapsed:.3f}")
        return out

    def human_lines(self) -> list[str]:
        out = [f"command: {self.command}"]
        for k, v in self.inputs.items():
            out.append(f"  {k}: {_flat(v)}")
        for k, v in self.result.items():
            out.append(f"{k}: {_flat(v)}")
        if self.verification is not None:
            out.append(f"verification: {self.verification}")
        out.append(f"elapsed: {self.elapsed:.3f}s")
        return out


def _flat(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(_flat(x) for x in v)
    if isinstance(v, np.ndarray):
        return " ".join(str(int(x)) for x in v)
    return str(v)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _verdict_exit(report: RunReport, verdict: bool) -> int:
    report.result.setdefault("verdict", verdict)
    if report.verification not in (None, "agree", "skipped"):
        return 2
    return 0 if verdict else 1


def _code_inputs(report: RunReport, path: str, code) -> None:
    report.inputs["code"] = path
    report.inputs["params"] = f"[{code.n},{code.k}] over GF({code.field.q})"


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_lcd_check(args, report: RunReport) -> int:
    code = parse_code(_read(args.code))
    sigma = sigma_from_spec(args.sigma, code.field, code.n)
    _code_inputs(report, args.code, code)
    report.inputs["sigma"] = args.sigma
    h = codes.hull_dim(code, sigma)
    verdict = h == 0
    report.result["hull_dim"] = h
    brute = oracle.brute_hull_dim(code, sigma)
    report.verification = "agree" if brute == h else f"disagree (oracle {brute})"
    return _verdict_exit(report, verdict)


def _cmd_lcd_make(args, report: RunReport) -> int:
    code = parse_code(_read(args.code))
    _code_inputs(report, args.code, code)
    sigma, out_code = codes.make_lcd_sigma(code)
    ok = codes.is_sigma_lcd(out_code, sigma)
    report.result["out_params"] = f"[{out_code.n},{out_code.k}]"
    report.result["sigma_perm"] = sigma.perm
    report.result["sigma_diag"] = sigma.diag
    report.result["sigma_frob"] = sigma.frob
    brute = oracle.brute_hull_dim(out_code, sigma)
    report.verification = "agree" if (brute == 0) == ok else "disagree"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dump_sigma(sigma))
        report.result["written"] = args.out
    return _verdict_exit(report, ok)


def _cmd_lcd_hull(args, report: RunReport) -> int:
    code = parse_code(_read(args.code))
    sigma = sigma_from_spec(args.sigma, code.field, code.n)
    _code_inputs(report, args.code, code)
    report.inputs["sigma"] = args.sigma
    h = codes.hull_dim(code, sigma)
    report.result["hull_dim"] = h
    brute = oracle.brute_hull_dim(code, sigma)
    report.verification = "agree" if brute == h else f"disagree (oracle {brute})"
    return 0 if report.verification == "agree" else 2


def _cmd_lcp_build(args, report: RunReport) -> int:
    c1 = parse_code(_read(args.code1))
    c2 = parse_code(_read(args.code2))
    report.inputs["code1"] = args.code1
    report.inputs["code2"] = args.code2
    budget = oracle.EnumerationBudget(args.budget)
    pair = codes.build_lcp(c1, c2, budget=budget)
    report.result["params"] = pair.params
    report.result["n"] = pair.n
    report.result["k"] = pair.k
    report.result["d1"] = "unknown" if pair.d1 is None else pair.d1
    report.result["d2"] = "unknown" if pair.d2 is None else pair.d2
    report.result["sigma_perm"] = pair.sigma.perm
    report.result["sigma_diag"] = pair.sigma.diag
    inter = oracle.brute_intersection_dim(pair.c1, pair.c2)
    s = linalg.sum_dim(pair.c1.field, pair.c1.gen, pair.c2.gen)
    report.verification = "agree" if inter == 0 and s == pair.n else "disagree"
    return 0 if report.verification == "agree" else 2


def _cmd_gqc_cosets(args, report: RunReport) -> int:
    F = parse_field(args.q)
    ctx = CyclotomicContext(F, args.m)
    report.inputs["q"] = field_str(F)
    report.inputs["m"] = args.m
    report.result["count"] = len(ctx.leaders)
    for i in ctx.leaders:
        report.result[f"coset.{i}"] = list(ctx.cosets[i])
    return 0


def _cmd_gqc_gamma(args, report: RunReport) -> int:
    F = parse_field(args.q)
    ctx = CyclotomicContext(F, args.m)
    gp = gamma_partition(ctx)
    report.inputs["q"] = field_str(F)
    report.inputs["m"] = args.m
    report.result["gamma0_plus"] = list(gp.g0_plus)
    report.result["gamma0_minus"] = list(gp.g0_minus)
    report.result["gamma1"] = list(gp.g1)
    return 0


def _cmd_gqc_constituents(args, report: RunReport) -> int:
    code = parse_gqc(_read(args.file))
    ctx = gqc.context_for(code)
    report.inputs["file"] = args.file
    report.inputs["blocks"] = code.block_lengths
    report.result["k"] = code.k
    for i in ctx.leaders:
        con = gqc.constituent(code, ctx, i)
        report.result[f"constituent.{i}.dim"] = con.dim
        report.result[f"constituent.{i}.active"] = list(con.active)
    return 0


def _cmd_gqc_check(args, report: RunReport) -> int:
    code = parse_gqc(_read(args.file))
    ctx = gqc.context_for(code)
    report.inputs["file"] = args.file
    report.inputs["a"] = args.a
    report.inputs["test"] = args.test
    sigma = code.mu_map(args.a)
    if args.test == "lcd":
        verdict = gqc.is_mua_lcd(code, ctx, args.a)
        brute_ok = oracle.brute_hull_dim(code.flat, sigma) == 0
    elif args.test == "so":
        verdict = gqc.is_mua_self_orthogonal(code, ctx, args.a)
        dual = codes.sigma_dual(code.flat, sigma)
        brute_ok = dual.contains_code(code.flat)
    else:
        verdict = gqc.is_mua_self_dual(code, ctx, args.a)
        brute_ok = codes.sigma_dual(code.flat, sigma) == code.flat
    report.verification = "agree" if brute_ok == verdict else "disagree"
    return _verdict_exit(report, verdict)


def _cmd_gqc_onegen(args, report: RunReport) -> int:
    F, blocks, gens = parse_gqc_raw(_read(args.file))
    if len(gens) != 1:
        raise SigmaLcdError("onegen needs exactly one generator line")
    cvec = gens[0]
    report.inputs["file"] = args.file
    report.inputs["a"] = args.a
    ctx = CyclotomicContext(F, gqc.lcm_of(blocks))
    verdict = gqc.one_gen_lcd_eval(ctx, blocks, cvec, args.a)
    report.result["eval_form"] = verdict
    checks = []
    if len(set(blocks)) == 1:
        g_verdict = gqc.one_gen_lcd_gcd(F, blocks, cvec, args.a)
        report.result["gcd_form"] = g_verdict
        checks.append(g_verdict == verdict)
    code = gqc.one_gen_code(F, blocks, cvec)
    brute_ok = oracle.brute_hull_dim(code.flat, code.mu_map(args.a)) == 0
    checks.append(brute_ok == verdict)
    report.verification = "agree" if all(checks) else "disagree"
    return _verdict_exit(report, verdict)


def _cmd_gqc_product(args, report: RunReport) -> int:
    base, comps = parse_product_spec(_read(args.spec))
    report.inputs["spec"] = args.spec
    res = gqc.product_lcd_gqc(base, comps)
    report.result["blocks"] = res.code.block_lengths
    report.result["n"] = res.code.n
    report.result["dim"] = res.dim
    report.result["component_dims"] = list(res.component_dims)
    report.result["distance_bound"] = res.distance_bound
    report.result["mu1_lcd"] = True
    budget = oracle.EnumerationBudget(args.budget)
    if res.dim and base.q**res.dim <= budget.max_words:
        d = oracle.brute_min_distance(res.code.flat, budget=budget, jobs=args.jobs)
        report.result["min_distance"] = d
        report.verification = "agree" if d >= res.distance_bound else "disagree"
    else:
        report.verification = "skipped"
    return 0 if report.verification in ("agree", "skipped") else 2


def _cmd_abelian_check(args, report: RunReport) -> int:
    group = abelian.parse_group(args.group)
    code = parse_code(_read(args.code))
    _code_inputs(report, args.code, code)
    report.inputs["group"] = repr(group)
    verdict = abelian.is_abelian_mu1_lcd(code, group)
    sigma = abelian.mu_sigma(code.field, group)
    brute_ok = oracle.brute_hull_dim(code, sigma) == 0
    e = abelian.find_idempotent_generator(code, group)
    report.result["idempotent_found"] = e is not None
    agree = brute_ok == verdict and (e is not None) == verdict
    report.verification = "agree" if agree else "disagree"
    return _verdict_exit(report, verdict)


def _cmd_abelian_idempotent(args, report: RunReport) -> int:
    group = abelian.parse_group(args.group)
    code = parse_code(_read(args.code))
    _code_inputs(report, args.code, code)
    report.inputs["group"] = repr(group)
    e = abelian.find_idempotent_generator(code, group)
    if e is None:
        report.result["found"] = False
        return 1
    report.result["found"] = True
    report.result["coeffs"] = e.coeffs
    report.verification = "agree" if abelian.is_idempotent(e) else "disagree"
    return 0 if report.verification == "agree" else 2


def _cmd_oracle_mindist(args, report: RunReport) -> int:
    code = parse_code(_read(args.file))
    _code_inputs(report, args.file, code)
    budget = oracle.EnumerationBudget(args.budget)
    d = oracle.brute_min_distance(code, budget=budget, jobs=args.jobs)
    report.result["min_distance"] = d
    return 0


def _cmd_oracle_intersect(args, report: RunReport) -> int:
    c1 = parse_code(_read(args.file1))
    c2 = parse_code(_read(args.file2))
    report.inputs["file1"] = args.file1
    report.inputs["file2"] = args.file2
    report.result["intersection_dim"] = oracle.brute_intersection_dim(c1, c2)
    return 0


def _cmd_oracle_search(args, report: RunReport) -> int:
    code = parse_code(_read(args.file))
    _code_inputs(report, args.file, code)
    report.inputs["family"] = args.family
    sigma = oracle.exhaustive_sigma_search(code, family=args.family)
    if sigma is None:
        report.result["found"] = False
        return 1
    report.result["found"] = True
    report.result["sigma_perm"] = sigma.perm
    report.result["sigma_diag"] = sigma.diag
    report.result["sigma_frob"] = sigma.frob
    return 0


# ---------------------------------------------------------------------------
# repro suites


def _golay_code():
    F2 = make_field(2)
    ctx = CyclotomicContext(F2, 23)
    best = None
    for subset, code in gqc.divisor_cyclic_codes(ctx):
        if code.k != 12:
            continue
        g = poly.from_seq([1])
        for i in subset:
            g = poly.mul(F2, g, ctx.minimal_poly(i))
        enc = sum(int(v) << t for t, v in enumerate(g))
        if best is None or enc < best[0]:
            best = (enc, code)
    assert best is not None
    return best[1]


def _repro_golay23(report: RunReport) -> bool:
    code = _golay_code()
    ctx = gqc.context_for(code)
    d = oracle.brute_min_distance(code.flat)
    report.result["params"] = f"[23,{code.k},{d}]"
    mu_ok = gqc.is_mua_lcd(code, ctx, -1)
    report.result["mu1_lcd"] = mu_ok
    group = abelian.cyclic_group(23)
    e = abelian.find_idempotent_generator(code.flat, group)
    report.result["idempotent_found"] = e is not None
    eh = codes.hull_dim(code.flat, None)
    report.result["euclidean_hull"] = eh
    brute_mu = oracle.brute_hull_dim(code.flat, code.mu_map(-1))
    brute_eh = oracle.brute_hull_dim(code.flat, None)
    report.verification = (
        "agree" if (brute_mu == 0) == mu_ok and brute_eh == eh else "disagree"
    )
    return mu_ok and e is not None and eh == 11 and d == 7 and code.k == 12


def _repro_qr7(report: RunReport) -> bool:
    F2 = make_field(2)
    ctx = CyclotomicContext(F2, 7)
    residues = sorted({(i * i) % 7 for i in range(1, 7)})
    c1 = np.zeros(7, dtype=np.int16)
    c1[0] = 1
    for i in residues:
        c1[i] = F2.add(int(c1[i]), 1)
    c2 = np.zeros(7, dtype=np.int16)
    c2[0] = 1
    for i in range(1, 7):
        if i not in residues:
            c2[i] = 1
    cvec = (poly.trim(c1), poly.trim(c2))
    blocks = (7, 7)
    disjoint = gqc.disjoint_support_lcd(ctx, blocks, cvec)
    report.result["disjoint_support"] = disjoint
    ev = gqc.one_gen_lcd_eval(ctx, blocks, cvec, -1)
    gc = gqc.one_gen_lcd_gcd(F2, blocks, cvec, -1)
    code = gqc.one_gen_code(F2, blocks, cvec)
    con_ok = gqc.is_mua_lcd(code, gqc.context_for(code), -1)
    brute_ok = oracle.brute_hull_dim(code.flat, code.mu_map(-1)) == 0
    report.result["eval_form"] = ev
    report.result["gcd_form"] = gc
    report.result["constituent_route"] = con_ok
    report.verification = "agree" if ev == gc == con_ok == brute_ok else "disagree"
    return disjoint and ev and gc and con_ok and brute_ok


def _repro_theorem1_binary(report: RunReport) -> bool:
    F2 = make_field(2)
    g = poly.from_seq([1, 1, 0, 1])
    ham = gqc.one_gen_code(F2, (7,), (g,)).flat
    report.result["input_params"] = f"[{ham.n},{ham.k}]"
    report.result["input_hull"] = codes.hull_dim(ham, None)
    sigma, out = codes.make_lcd_sigma(ham)
    ok = codes.is_sigma_lcd(out, sigma)
    report.result["out_params"] = f"[{out.n},{out.k}]"
    report.result["pure_permutation"] = sigma.is_permutation
    brute = oracle.brute_hull_dim(out, sigma)
    report.verification = "agree" if (brute == 0) == ok else "disagree"
    return ok and out.n == ham.n + 1 and sigma.is_permutation


def _repro_maximal_qc(report: RunReport) -> bool:
    F2 = make_field(2)
    m = 3
    seen: dict = {}
    for enc1 in range(2**m):
        for enc2 in range(2**m):
            c1 = poly.from_seq([(enc1 >> t) & 1 for t in range(m)])
            c2 = poly.from_seq([(enc2 >> t) & 1 for t in range(m)])
            chk = gqc.maximal_one_gen_check(F2, (m, m), (c1, c2), -1)
            if not (chk.lcd and chk.maximal):
                continue
            code = gqc.one_gen_code(F2, (m, m), (c1, c2))
            key = code.flat.gen.tobytes()
            canon = poly_str(chk.canonical)
            if key in seen:
                if seen[key] != canon:
                    report.verification = "disagree"
                    return False
            seen[key] = canon
    count = len(seen)
    report.result["count"] = count
    report.result["expected"] = 2**m
    report.result["distinct_canonicals"] = len(set(seen.values()))
    report.verification = "agree" if count == 2**m == len(set(seen.values())) else "disagree"
    return count == 2**m


_SUITES = {
    "golay23": _repro_golay23,
    "qr-idempotent-7": _repro_qr7,
    "theorem1-binary": _repro_theorem1_binary,
    "maximal-qc-count": _repro_maximal_qc,
}


def repro_suite(name: str, report: RunReport | None = None) -> RunReport:
    if name not in _SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; have {sorted(_SUITES)}")
    if report is None:
        report = RunReport(command=f"repro {name}")
    t0 = time.perf_counter()
    verdict = _SUITES[name](report)
    report.result["verdict"] = verdict
    report.elapsed = time.perf_counter() - t0
    return report


def _cmd_repro(args, report: RunReport) -> int:
    report.inputs["suite"] = args.suite
    repro_suite(args.suite, report)
    verdict = report.result["verdict"]
    if report.verification not in (None, "agree", "skipped"):
        return 2
    return 0 if verdict else 1


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="sigmalcd")
    top.add_argument("--format", choices=("human", "machine"), default="human")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--jobs", type=int, default=None)
        p.add_argument("--budget", type=int, default=oracle.DEFAULT_MAX_WORDS)

    lcd = sub.add_parser("lcd").add_subparsers(dest="sub", required=True)
    p = lcd.add_parser("check")
    p.add_argument("--code", required=True)
    p.add_argument("--sigma", default="id")
    common(p)
    p.set_defaults(fn=_cmd_lcd_check)
    p = lcd.add_parser("make")
    p.add_argument("--code", required=True)
    p.add_argument("--out", default=None)
    common(p)
    p.set_defaults(fn=_cmd_lcd_make)
    p = lcd.add_parser("hull")
    p.add_argument("--code", required=True)
    p.add_argument("--sigma", default="id")
    common(p)
    p.set_defaults(fn=_cmd_lcd_hull)

    lcp = sub.add_parser("lcp").add_subparsers(dest="sub", required=True)
    p = lcp.add_parser("build")
    p.add_argument("--code1", required=True)
    p.add_argument("--code2", required=True)
    common(p)
    p.set_defaults(fn=_cmd_lcp_build)

    g = sub.add_parser("gqc").add_subparsers(dest="sub", required=True)
    p = g.add_parser("cosets")
    p.add_argument("q")
    p.add_argument("m", type=int)
    p.set_defaults(fn=_cmd_gqc_cosets)
    p = g.add_parser("gamma")
    p.add_argument("q")
    p.add_argument("m", type=int)
    p.set_defaults(fn=_cmd_gqc_gamma)
    p = g.add_parser("constituents")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_gqc_constituents)
    p = g.add_parser("check")
    p.add_argument("file")
    p.add_argument("--a", type=int, default=-1)
    p.add_argument("--test", choices=("lcd", "so", "sd"), default="lcd")
    common(p)
    p.set_defaults(fn=_cmd_gqc_check)
    p = g.add_parser("onegen")
    p.add_argument("file")
    p.add_argument("--a", type=int, default=-1)
    common(p)
    p.set_defaults(fn=_cmd_gqc_onegen)
    p = g.add_parser("product")
    p.add_argument("spec")
    common(p)
    p.set_defaults(fn=_cmd_gqc_product)

    ab = sub.add_parser("abelian").add_subparsers(dest="sub", required=True)
    p = ab.add_parser("check")
    p.add_argument("--group", required=True)
    p.add_argument("--code", required=True)
    common(p)
    p.set_defaults(fn=_cmd_abelian_check)
    p = ab.add_parser("idempotent")
    p.add_argument("--group", required=True)
    p.add_argument("--code", required=True)
    common(p)
    p.set_defaults(fn=_cmd_abelian_idempotent)

    orc = sub.add_parser("oracle").add_subparsers(dest="sub", required=True)
    p = orc.add_parser("mindist")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=_cmd_oracle_mindist)
    p = orc.add_parser("intersect")
    p.add_argument("file1")
    p.add_argument("file2")
    common(p)
    p.set_defaults(fn=_cmd_oracle_intersect)
    p = orc.add_parser("search-sigma")
    p.add_argument("file")
    p.add_argument("--family", choices=oracle.SIGMA_FAMILIES, default="permutation-sample")
    common(p)
    p.set_defaults(fn=_cmd_oracle_search)

    p = sub.add_parser("repro")
    p.add_argument("suite", choices=sorted(_SUITES))
    common(p)
    p.set_defaults(fn=_cmd_repro)

    return top


def cmd_dispatch(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    name = args.command if not getattr(args, "sub", None) else f"{args.command} {args.sub}"
    report = RunReport(command=name)
    t0 = time.perf_counter()
    try:
        rc = args.fn(args, report)
    except (SigmaLcdError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not report.elapsed:
        report.elapsed = time.perf_counter() - t0
    lines = report.machine_lines() if args.format == "machine" else report.human_lines()
    print("\n".join(lines))
    return rc


def entry() -> None:
    sys.exit(cmd_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    entry()
