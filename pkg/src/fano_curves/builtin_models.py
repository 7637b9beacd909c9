"""Embedded data for the three fully specified models.

Identical copies ship as ``data/models/<name>.json``; the test suite keeps
the two in sync.
"""

QUARTIC = {'name': 'quartic',
 'rank': 1,
 'divisor_basis': ['H'],
 'pairing': [[1]],
 'anticanonical': [1],
 'pseff_divisor_rays': [[1]],
 'nef_curve_rays': [[1]],
 'contractible_divisors': [],
 'fibrations': [],
 'line_classes': [{'class': [1], 'label': 'line'}],
 'conic_classes': [{'class': [2], 'label': 'conic'}],
 'component_rule': {'kind': 'unique_per_nef_class', 'min_degree': 2},
 'metadata': {'description': 'smooth quartic threefold in P^4',
              'curve_lattice_is_pairing_dual': True,
              'has_a_cover_iitaka0': False,
              'named_divisors': {},
              'named_curves': {'line': [1], 'conic': [2]},
              'divisor_identities': ['antiK = H'],
              'curve_identities': ['conic = 2line'],
              'pairing_checks': [{'divisor': 'antiK', 'curve': 'line', 'value': 1},
                                 {'divisor': 'antiK', 'curve': 'conic', 'value': 2}]}}

P_O_O2 = {'name': 'p_o_o2',
 'rank': 2,
 'divisor_basis': ['H', 'E0'],
 'pairing': [[1, 0], [0, 1]],
 'anticanonical': [5, 2],
 'pseff_divisor_rays': [[1, 0], [0, 1]],
 'nef_curve_rays': [[1, 0], [0, 1]],
 'contractible_divisors': [{'label': 'E0',
                            'divisor_class': [0, 1],
                            'etype': 'E5',
                            'flags': [],
                            'line_class': [1, -2]}],
 'fibrations': [{'label': 'p',
                 'kind': 'P1Bundle',
                 'base_dimension': 2,
                 'pullback': [1, 0],
                 'contracted_face': [[0, 1]]}],
 'line_classes': [{'class': [1, -2], 'label': 'l0'}],
 'conic_classes': [{'class': [0, 1], 'label': 'f'}],
 'component_rule': {'kind': 'unique_per_nef_class', 'min_degree': 2},
 'metadata': {'description': 'P(O + O(2)) over P^2; E0 is the rigid section, H the '
                             'pullback of a line',
              'curve_lattice_is_pairing_dual': True,
              'has_a_cover_iitaka0': False,
              'e5_classification_index': 2,
              'named_divisors': {},
              'named_curves': {'f': [0, 1], 's': [1, 0], 'l0': [1, -2]},
              'divisor_identities': ['antiK = 2E0 + 5H'],
              'curve_identities': ['s = 2f + l0'],
              'pairing_checks': [{'divisor': 'antiK', 'curve': 'f', 'value': 2},
                                 {'divisor': 'antiK', 'curve': 's', 'value': 5},
                                 {'divisor': 'antiK', 'curve': 'l0', 'value': 1},
                                 {'divisor': 'E0', 'curve': 'l0', 'value': -2}]}}

TWO_E5 = {'name': 'two_e5',
 'rank': 3,
 'divisor_basis': ['H', 'E0', 'E_inf'],
 'pairing': [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
 'anticanonical': [3, 1, 1],
 'pseff_divisor_rays': [[0, 1, 0], [0, 0, 1], [2, 1, -1], [2, -1, 1]],
 'nef_curve_rays': [[0, 1, 1], [1, 0, 0], [1, 0, 2], [1, 2, 0]],
 'contractible_divisors': [{'label': 'E0',
                            'divisor_class': [0, 1, 0],
                            'etype': 'E5',
                            'flags': [],
                            'line_class': [1, -2, 0]},
                           {'label': 'E_inf',
                            'divisor_class': [0, 0, 1],
                            'etype': 'E5',
                            'flags': [],
                            'line_class': [1, 0, -2]},
                           {'label': 'E',
                            'divisor_class': [2, 1, -1],
                            'etype': 'E1',
                            'flags': [],
                            'line_class': [0, 0, 1]},
                           {'label': "E'",
                            'divisor_class': [2, -1, 1],
                            'etype': 'E1',
                            'flags': [],
                            'line_class': [0, 1, 0]}],
 'fibrations': [{'label': 'p',
                 'kind': 'ConicBundle',
                 'base_dimension': 2,
                 'pullback': [1, 0, 0],
                 'contracted_face': [[0, 1, 1]]}],
 'line_classes': [{'class': [1, -2, 0], 'label': 'l0'},
                  {'class': [1, 0, -2], 'label': 'l_inf'},
                  {'class': [0, 0, 1], 'label': 'fiber of E'},
                  {'class': [0, 1, 0], 'label': "fiber of E'"}],
 'conic_classes': [{'class': [0, 1, 1], 'label': 'R1'}],
 'component_rule': {'kind': 'unique_per_nef_class', 'min_degree': 2},
 'metadata': {'description': 'blow-up of P(O + O(2)) along a quartic curve in a '
                             'minimal moving section',
              'curve_lattice_is_pairing_dual': True,
              'has_a_cover_iitaka0': False,
              'e5_classification_index': 6,
              'named_divisors': {'E': [2, 1, -1], "E'": [2, -1, 1]},
              'named_curves': {'R1': [0, 1, 1],
                               'R2': [1, 0, 0],
                               'R3': [1, 0, 2],
                               'R4': [1, 2, 0],
                               'R5': [1, 0, 1],
                               'R6': [1, 1, 0],
                               'l0': [1, -2, 0],
                               'l_inf': [1, 0, -2]},
              'divisor_identities': ['E = E0 - E_inf + 2H',
                                     "E + E' = 4H",
                                     'antiK = 3H + E0 + E_inf'],
              'curve_identities': ['R2 + R3 = 2R5',
                                   'R2 + R4 = 2R6',
                                   'R1 + 2R2 = R5 + R6',
                                   'R1 + R2 + R5 = R3 + R6',
                                   'R1 + R2 + R6 = R4 + R5',
                                   'R1 + R5 + R6 = R3 + R4',
                                   'R3 = 2R1 + l0',
                                   'R4 = 2R1 + l_inf'],
              'pairing_checks': [{'divisor': 'H + E0 - E_inf',
                                  'curve': 'R3',
                                  'value': -1},
                                 {'divisor': 'H + E0 - E_inf',
                                  'curve': 'R1',
                                  'value': 0},
                                 {'divisor': 'H + E0 - E_inf',
                                  'curve': 'R5',
                                  'value': 0},
                                 {'divisor': 'H + E0 - E_inf',
                                  'curve': 'R2',
                                  'sign': '+'},
                                 {'divisor': 'H + E0 - E_inf',
                                  'curve': 'R4',
                                  'sign': '+'},
                                 {'divisor': 'H + E0 - E_inf',
                                  'curve': 'R6',
                                  'sign': '+'},
                                 {'divisor': 'H + E_inf - E0',
                                  'curve': 'R4',
                                  'sign': '-'},
                                 {'divisor': 'H + E_inf - E0',
                                  'curve': 'R1',
                                  'value': 0},
                                 {'divisor': 'H + E_inf - E0',
                                  'curve': 'R6',
                                  'value': 0},
                                 {'divisor': 'E0 - E_inf', 'curve': 'R5', 'value': -1},
                                 {'divisor': 'E0 - E_inf', 'curve': 'R6', 'value': 1},
                                 {'divisor': 'E0 - E_inf', 'curve': 'R1', 'value': 0},
                                 {'divisor': 'E0 - E_inf', 'curve': 'R2', 'value': 0},
                                 {'divisor': 'antiK', 'curve': 'R1', 'value': 2},
                                 {'divisor': 'antiK', 'curve': 'R2', 'value': 3},
                                 {'divisor': 'antiK', 'curve': 'R3', 'value': 5},
                                 {'divisor': 'antiK', 'curve': 'R4', 'value': 5},
                                 {'divisor': 'antiK', 'curve': 'R5', 'value': 4},
                                 {'divisor': 'antiK', 'curve': 'R6', 'value': 4},
                                 {'divisor': 'antiK', 'curve': 'R3 + R4', 'value': 10},
                                 {'divisor': 'E', 'curve': 'R2', 'value': 2},
                                 {'divisor': 'E', 'curve': 'R5', 'value': 1},
                                 {'divisor': 'E0', 'curve': 'l0', 'value': -2},
                                 {'divisor': 'E_inf', 'curve': 'l_inf', 'value': -2}]}}

BUILTIN_MODEL_DATA = {
    "quartic": QUARTIC,
    "p_o_o2": P_O_O2,
    "two_e5": TWO_E5,
}
