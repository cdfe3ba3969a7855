import argparse
import asyncio
import sys

from typing import Any, Callable, Dict, List, Optional

from arithmetic.cocycle_lab import (OneCochain, associativity_iff_cocycle, coboundary, crossed_product, h2_cyclic,
                                    is_cocycle)
from arithmetic.double_complex import total_complex_d2
from arithmetic.hilbert import (hilbert_symbol, product_formula_check, quaternion_invariants,
                                quaternion_support)
from arithmetic.obstruction_engine import (corollary_q_deduce, global_brauer_deduce, global_report,
                                           hasse_brauer_noether_deduce)
from arithmetic.period_index import (admissible_with_section, enumerate_admissible, lichtenbaum_admissible,
                                     section_consequences, step1_equivalence_holds)
from arithmetic.regular_models import glue_circle, glued_genus, index_from_model, obstructs_section
from factories.descriptor_factory import DescriptorFactory
from loaders.config_loader import ConfigLoader
from loaders.input_loader import load_json_document
from models.curve_descriptor import ConicCover, DiagonalForm, ModelCurve
from models.engine_settings import EngineSettings
from models.invariant_class import HALF, ZERO
from models.pi_triple import PITriple, SectionContext
from models.place import Place, QuaternionSymbol
from models.special_fibre import GluingSpec
from reporting.json_codec import document, dumps
from reporting.report_saver import ReportSaver
from utils.clogger import CLogger, get_logger, parse_level

EXIT_OK = 0
EXIT_ERROR = 2

_logger = get_logger("SectionFlow")

Payload = Dict[str, Any]


def _int_list(text: str) -> List[int]:
    return [int(item) for item in text.split(",") if item.strip()] if text else []


def _bad_places(text: str) -> List[tuple]:
    places = []
    for item in (text.split(",") if text else []):
        label, _, prime = item.partition(":")
        if not prime:
            raise ValueError(f"Bad place must be LABEL:PRIME, got: {item}")
        places.append((label.strip(), int(prime)))
    return places


def cmd_hilbert(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    symbol = QuaternionSymbol(args.a, args.b)
    if args.place:
        place = Place.parse(args.place)
        value = hilbert_symbol(symbol, place)
        return {"symbol": symbol, "hilbert_symbol": value,
                "places": [{"place": place, "invariant": HALF if value == -1 else ZERO}]}

    invariants = quaternion_invariants(symbol)
    return {
        "symbol": symbol,
        "places": [{"place": place, "invariant": invariants[place]}
                   for place in sorted(invariants, key=Place.sort_key)],
        "support": sorted(quaternion_support(symbol), key=Place.sort_key),
        "product_formula": product_formula_check(symbol),
    }


def cmd_cocycle(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    raw = load_json_document(args.file, "cocycle")
    action = DescriptorFactory.create_action(raw)
    module = action.module
    h2 = h2_cyclic(action)
    payload = {
        "group_order": action.order,
        "module": repr(module),
        "module_order": module.order,
        "h2": {"order": h2.order, "fixed_points_order": h2.fixed_order, "norm_image_order": h2.norm_image_order},
    }

    raw_cochain = raw.get('cochain')
    if raw_cochain is None:
        return payload

    cochain = DescriptorFactory.create_cochain(raw_cochain)
    if isinstance(cochain, OneCochain):
        boundary = coboundary(action, cochain)
        payload["coboundary"] = [[module.render(x) for x in row] for row in boundary.values]
        payload["coboundary_is_cocycle"] = is_cocycle(action, boundary)
    else:
        cocycle = is_cocycle(action, cochain)
        payload["is_cocycle"] = cocycle
        payload["associativity_iff_cocycle"] = associativity_iff_cocycle(action, cochain)
        if cocycle:
            table = crossed_product(action, cochain)
            payload["basis_products"] = [[f"{module.render(u)}*x{s}" for u, s in row] for row in table.basis_table()]
    return payload


def cmd_d2(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    raw = load_json_document(args.file, "double complex")
    dc = DescriptorFactory.create_double_complex(raw)
    x = raw.get('x')
    if x is None:
        raise ValueError(f"Missing key 'x' in element: {args.file}")
    e2 = total_complex_d2(dc, x, settings.max_witness_search)
    return {"modulus": dc.modulus, "is_double_complex": dc.is_double_complex(), "x": [int(v) for v in x],
            "d2": {"position": list(e2.position), "representative": list(e2.representative),
                   "boundary_size": e2.boundary_size, "is_zero": e2.is_zero}}


def cmd_triples_check(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    triple = PITriple(args.g, args.pe, args.ix)
    result = lichtenbaum_admissible(triple)
    payload = {"result": result}
    if result and triple.g >= 2:
        payload["period_equals_index_iff_index_divides_g_minus_1"] = step1_equivalence_holds(triple)
    return payload


def cmd_triples_enumerate(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    pairs = enumerate_admissible(args.g, args.bound)
    return {"g": args.g, "bound": args.bound, "triples": [PITriple(args.g, pe, ix) for pe, ix in pairs]}


def cmd_triples_with_section(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    pairs = admissible_with_section(args.g, args.p)
    report = section_consequences(SectionContext(args.p, args.g, True))
    return {"g": args.g, "p": args.p, "triples": [PITriple(args.g, pe, ix) for pe, ix in pairs],
            "rules": report.conclusions}


def cmd_triples_consequences(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    ctx = SectionContext(args.p, args.g, not args.no_section, args.even_cover)
    return {"context": {"p": ctx.p, "g": ctx.g, "has_section": ctx.has_section,
                        "even_cover_with_section": ctx.even_cover_with_section},
            "report": section_consequences(ctx)}


def cmd_model_index(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    fibre = DescriptorFactory.create_fibre(load_json_document(args.fibre, "fibre"))
    payload = {"fibre": fibre, "index": index_from_model(fibre)}
    if args.prime:
        payload["prime"] = args.prime
        payload["obstructs_section"] = obstructs_section(fibre, args.prime)
    return payload


def cmd_model_glue(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    gluing = GluingSpec(args.n, args.q, args.genus_c)
    fibre = glue_circle(gluing)
    return {"n": gluing.n, "q": gluing.q, "characteristic": gluing.characteristic, "fibre": fibre,
            "index": index_from_model(fibre), "glued_genus": glued_genus(gluing),
            "obstructs_section": obstructs_section(fibre, gluing.characteristic)}


def _analyze(curve, args: argparse.Namespace) -> Payload:
    return {"report": global_report(curve, assume_section=args.assume_section)}


def cmd_analyze_diagonal(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    return _analyze(DiagonalForm(args.n, args.a, args.b), args)


def cmd_analyze_cover(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    return _analyze(ConicCover(args.a, args.b, args.degree, args.genus), args)


def cmd_analyze_model(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    fibre = DescriptorFactory.create_fibre(load_json_document(args.fibre, "fibre"))
    return _analyze(ModelCurve(args.genus, args.prime, fibre), args)


def cmd_deduce_hbn(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    constraints = DescriptorFactory.create_constraints(load_json_document(args.constraints, "constraints"))
    vectors = hasse_brauer_noether_deduce(constraints)
    return {"places": [place for place, _ in constraints], "orders": [group.order for _, group in constraints],
            "vectors": vectors, "only_zero": len(vectors) == 1 and all(a.is_zero for a in vectors[0])}


def cmd_deduce_corollary_q(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    return {"report": corollary_q_deduce(args.genus, args.section, _int_list(args.bad_primes))}


def cmd_deduce_global(args: argparse.Namespace, settings: EngineSettings) -> Payload:
    return {"report": global_brauer_deduce(args.genus, args.section, _bad_places(args.bad_places))}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sectionflow",
                                     description="Period-index invariants and section obstructions for curves.")
    parser.add_argument("--config", default=None, help="engine settings file (default: configs/sectionflow.json)")
    parser.add_argument("--out", default=None, help="also save the JSON document to this file")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hilbert", help="Hilbert symbols and quaternion invariants")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.add_argument("--place", default=None, help="'real' or a prime")
    s.set_defaults(handler=cmd_hilbert)

    s = sub.add_parser("cocycle", help="verify a cochain over a cyclic Galois action")
    s.add_argument("file")
    s.set_defaults(handler=cmd_cocycle)

    s = sub.add_parser("d2", help="evaluate d_2 on C^{0,1} of a finite double complex")
    s.add_argument("file")
    s.set_defaults(handler=cmd_d2)

    triples = sub.add_parser("triples").add_subparsers(dest="action", required=True)
    s = triples.add_parser("check")
    for name in ("g", "pe", "ix"):
        s.add_argument(name, type=int)
    s.set_defaults(handler=cmd_triples_check)
    s = triples.add_parser("enumerate")
    s.add_argument("g", type=int)
    s.add_argument("--bound", type=int, default=None)
    s.set_defaults(handler=cmd_triples_enumerate)
    s = triples.add_parser("with-section")
    s.add_argument("g", type=int)
    s.add_argument("p", type=int)
    s.set_defaults(handler=cmd_triples_with_section)
    s = triples.add_parser("consequences")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--no-section", action="store_true")
    s.add_argument("--even-cover", action="store_true")
    s.set_defaults(handler=cmd_triples_consequences)

    model = sub.add_parser("model").add_subparsers(dest="action", required=True)
    s = model.add_parser("index")
    s.add_argument("--fibre", required=True)
    s.add_argument("--prime", type=int, default=None)
    s.set_defaults(handler=cmd_model_index)
    s = model.add_parser("glue")
    s.add_argument("n", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--genus-c", type=int, default=2)
    s.set_defaults(handler=cmd_model_glue)

    analyze = sub.add_parser("analyze").add_subparsers(dest="action", required=True)
    s = analyze.add_parser("diagonal")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.set_defaults(handler=cmd_analyze_diagonal)
    s = analyze.add_parser("cover")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--genus", type=int, required=True)
    s.set_defaults(handler=cmd_analyze_cover)
    s = analyze.add_parser("model")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--prime", type=int, required=True)
    s.add_argument("--fibre", required=True)
    s.set_defaults(handler=cmd_analyze_model)
    for name in ("diagonal", "cover", "model"):
        analyze.choices[name].add_argument("--assume-section", action="store_true")
        analyze.choices[name].add_argument("--json", action="store_true", help="accepted; output is always JSON")

    deduce = sub.add_parser("deduce").add_subparsers(dest="action", required=True)
    s = deduce.add_parser("hbn")
    s.add_argument("--constraints", required=True)
    s.set_defaults(handler=cmd_deduce_hbn)
    s = deduce.add_parser("corollary-q")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--section", action="store_true")
    s.add_argument("--bad-primes", default="")
    s.set_defaults(handler=cmd_deduce_corollary_q)
    s = deduce.add_parser("global")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--section", action="store_true")
    s.add_argument("--bad-places", default="", help="LABEL:PRIME,...")
    s.set_defaults(handler=cmd_deduce_global)

    return parser


def run(argv: Optional[List[str]] = None, out: Callable[[str], None] = print) -> int:
    """
    Run one command and write its JSON document through `out`.

    Returns:
        int: 0 on success, 2 when the input was rejected.
    """
    args = build_parser().parse_args(argv)
    schema = EngineSettings().schema
    indent = EngineSettings().json_indent
    try:
        if args.log_level:
            CLogger.set_global_level(parse_level(args.log_level))
        settings = ConfigLoader(args.config).get_settings()
        schema, indent = settings.schema, settings.json_indent
        CLogger.set_global_level(parse_level(args.log_level or settings.log_level))

        doc = document(schema, args.handler(args, settings))
        if args.out:
            asyncio.run(ReportSaver(settings.output_directory, indent).save(args.out, doc))
    except (ValueError, FileNotFoundError) as e:
        _logger.error(f"{args.command}: {e}")
        out(dumps({"schema": schema, "error": str(e)}, indent))
        return EXIT_ERROR

    out(dumps(doc, indent))
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
