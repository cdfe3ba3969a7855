from typing import Any, Dict, List, Tuple, Union

import numpy as np

from arithmetic.cocycle_lab import (CyclicGaloisAction, CyclicModule, FiniteAbelianModule, FiniteFieldUnits,
                                    OneCochain, SignModule, TableModule, TwoCochain)
from arithmetic.double_complex import DoubleComplex
from models.invariant_class import CyclicSubgroup
from models.place import Place
from models.special_fibre import FibreComponent, SpecialFibre

Cochain = Union[OneCochain, TwoCochain]


class DescriptorFactory:
    """Builds domain objects from the raw JSON documents read by the CLI."""
    MODULE_FINITE_FIELD = 'finite_field_units'
    MODULE_CYCLIC = 'cyclic'
    MODULE_SIGN = 'sign'
    MODULE_TABLE = 'table'
    MODULE_PRODUCT = 'cyclic_product'
    COCHAIN_ONE = 'one'
    COCHAIN_TWO = 'two'

    @staticmethod
    def _require(raw: Dict[str, Any], key: str) -> Any:
        if not isinstance(raw, dict):
            raise ValueError(f"Expected a JSON object, got: {raw}")
        if key not in raw:
            raise ValueError(f"Missing key '{key}' in element: {raw}")
        return raw[key]

    @staticmethod
    def create_fibre(raw: Dict[str, Any]) -> SpecialFibre:
        """
        Create a SpecialFibre from {"components": [{"label": "Y", "e": 1, "f": 6}], "dual_graph": [["a", "b"]]}.

        :param raw: The decoded JSON object; labels default to Y0, Y1, ...

        :return: SpecialFibre: The validated fibre.
        """
        raw_components = DescriptorFactory._require(raw, 'components')
        if not isinstance(raw_components, list) or not raw_components:
            raise ValueError(f"A fibre needs a nonempty component list: {raw}")

        components = []
        for index, component in enumerate(raw_components):
            e = DescriptorFactory._require(component, 'e')
            f = DescriptorFactory._require(component, 'f')
            components.append(FibreComponent(str(component.get('label', f"Y{index}")), int(e), int(f)))

        raw_graph = raw.get('dual_graph')
        dual_graph = None
        if raw_graph is not None:
            if any(not isinstance(edge, (list, tuple)) or len(edge) != 2 for edge in raw_graph):
                raise ValueError(f"Dual graph edges must be pairs of labels: {raw_graph}")
            dual_graph = tuple((str(u), str(v)) for u, v in raw_graph)

        return SpecialFibre(tuple(components), dual_graph)

    @staticmethod
    def create_constraints(raw: Union[Dict[str, Any], List[Any]]) -> List[Tuple[Place, CyclicSubgroup]]:
        """
        Create local invariant constraints from [{"place": "3", "order": 3}, ...].

        :param raw: The list, or an object holding it under "constraints".

        :return: List of places with their allowed cyclic groups, in input order.
        """
        entries = DescriptorFactory._require(raw, 'constraints') if isinstance(raw, dict) else raw
        if not isinstance(entries, list):
            raise ValueError(f"Constraints must be a list: {raw}")

        return [
            (Place.parse(DescriptorFactory._require(entry, 'place')),
             CyclicSubgroup(int(DescriptorFactory._require(entry, 'order'))))
            for entry in entries
        ]

    @staticmethod
    def create_module(raw: Dict[str, Any]) -> FiniteAbelianModule:
        kind = DescriptorFactory._require(raw, 'kind')

        if kind == DescriptorFactory.MODULE_FINITE_FIELD:
            return FiniteFieldUnits(int(DescriptorFactory._require(raw, 'q')), int(DescriptorFactory._require(raw, 'm')))
        if kind == DescriptorFactory.MODULE_CYCLIC:
            return CyclicModule(int(DescriptorFactory._require(raw, 'n')), int(raw.get('action_exponent', 1)))
        if kind == DescriptorFactory.MODULE_SIGN:
            return SignModule()
        if kind == DescriptorFactory.MODULE_TABLE:
            table = DescriptorFactory._require(raw, 'table')
            image = DescriptorFactory._require(raw, 'generator')
            if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
                raise ValueError(f"Module table must be a list of rows: {table}")
            return TableModule([[int(x) for x in row] for row in table], [int(x) for x in image], raw.get('names'))
        if kind == DescriptorFactory.MODULE_PRODUCT:
            orders = [int(n) for n in DescriptorFactory._require(raw, 'orders')]
            matrix = [[int(x) for x in row] for row in DescriptorFactory._require(raw, 'matrix')]
            return TableModule.product_of_cyclic(orders, matrix)

        raise ValueError(f"Invalid module kind: {kind}, expected one of "
                         f"{DescriptorFactory.MODULE_FINITE_FIELD}, {DescriptorFactory.MODULE_CYCLIC}, "
                         f"{DescriptorFactory.MODULE_SIGN}, {DescriptorFactory.MODULE_TABLE}, "
                         f"{DescriptorFactory.MODULE_PRODUCT}")

    @staticmethod
    def create_action(raw: Dict[str, Any]) -> CyclicGaloisAction:
        """
        Create the action of Z/m from {"group_order": m, "module": {...}}.

        For finite field units the group order defaults to the extension degree.
        """
        module = DescriptorFactory.create_module(DescriptorFactory._require(raw, 'module'))
        default_order = module.m if isinstance(module, FiniteFieldUnits) else None
        order = raw.get('group_order', default_order)
        if order is None:
            raise ValueError(f"Missing key 'group_order' in element: {raw}")
        return CyclicGaloisAction(int(order), module)

    @staticmethod
    def create_cochain(raw: Dict[str, Any]) -> Cochain:
        """
        Create a cochain from {"kind": "one", "values": [...]} or {"kind": "two", "values": [[...], ...]}.
        """
        kind = DescriptorFactory._require(raw, 'kind')
        values = DescriptorFactory._require(raw, 'values')

        if kind == DescriptorFactory.COCHAIN_ONE:
            return OneCochain(tuple(int(v) for v in values))
        if kind == DescriptorFactory.COCHAIN_TWO:
            return TwoCochain(tuple(tuple(int(v) for v in row) for row in values))

        raise ValueError(f"Invalid cochain kind: {kind}, expected "
                         f"{DescriptorFactory.COCHAIN_ONE} or {DescriptorFactory.COCHAIN_TWO}")

    @staticmethod
    def create_double_complex(raw: Dict[str, Any]) -> DoubleComplex:
        """
        Create a DoubleComplex from
        {"modulus": n, "ranks": [[p, q, k], ...], "horizontal": [{"at": [p, q], "matrix": [[...]]}], "vertical": [...]}.

        :param raw: The decoded JSON object; missing maps are zero.

        :return: DoubleComplex: The complex with its map shapes validated.
        """
        modulus = int(DescriptorFactory._require(raw, 'modulus'))
        ranks = {}
        for entry in DescriptorFactory._require(raw, 'ranks'):
            if not isinstance(entry, list) or len(entry) != 3:
                raise ValueError(f"Rank entries must be [p, q, k]: {entry}")
            p, q, k = (int(v) for v in entry)
            ranks[(p, q)] = k

        def maps(key: str) -> Dict[Tuple[int, int], np.ndarray]:
            table = {}
            for entry in raw.get(key, []):
                p, q = (int(v) for v in DescriptorFactory._require(entry, 'at'))
                matrix = np.array(DescriptorFactory._require(entry, 'matrix'), dtype=np.int64)
                if matrix.ndim != 2:
                    raise ValueError(f"Map at {(p, q)} must be a list of rows: {entry}")
                table[(p, q)] = matrix
            return table

        return DoubleComplex(modulus, ranks, maps('horizontal'), maps('vertical'))
