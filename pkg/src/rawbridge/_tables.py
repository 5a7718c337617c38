"""Embedded colorimetric constants. Generated by tools/make_tables.py; do not edit.

Sources:
  CMF_*        CIE 1931 2-degree standard observer (CIE 15), sampled every 5 nm.
  DAYLIGHT_*   CIE daylight basis functions S0, S1, S2 (CIE 15), every 10 nm.
  MACBETH_*    BabelColor average ColorChecker reflectances, 380-730 nm every 10 nm.
"""

import numpy as np

CMF_START_NM = 360.0
CMF_STEP_NM = 5.0
CMF_XYZ = np.array([
    [
        0.0001299, 0.0002321, 0.0004149, 0.0007416, 0.001368, 0.002236, 0.004243, 0.00765,
        0.01431, 0.02319, 0.04351, 0.07763, 0.13438, 0.21477, 0.2839, 0.3285,
        0.34828, 0.34806, 0.3362, 0.3187, 0.2908, 0.2511, 0.19536, 0.1421,
        0.09564, 0.05795, 0.03201, 0.0147, 0.0049, 0.0024, 0.0093, 0.0291,
        0.06327, 0.1096, 0.1655, 0.22575, 0.2904, 0.3597, 0.43345, 0.51205,
        0.5945, 0.6784, 0.7621, 0.8425, 0.9163, 0.9786, 1.0263, 1.0567,
        1.0622, 1.0456, 1.0026, 0.9384, 0.85445, 0.7514, 0.6424, 0.5419,
        0.4479, 0.3608, 0.2835, 0.2187, 0.1649, 0.1212, 0.0874, 0.0636,
        0.04677, 0.0329, 0.0227, 0.01584, 0.0113592, 0.00811092, 0.00579035, 0.00410946,
        0.00289933, 0.00204919, 0.00143997, 0.000999949, 0.000690079, 0.000476021, 0.000332301, 0.000234826,
        0.00016615, 0.000117413, 8.30753e-05, 5.87065e-05, 4.15099e-05, 2.93533e-05, 2.06738e-05, 1.45598e-05,
        1.0254e-05, 7.22146e-06, 5.08587e-06, 3.58165e-06, 2.52252e-06, 1.77651e-06, 1.25114e-06,
    ],
    [
        3.917e-06, 6.965e-06, 1.239e-05, 2.202e-05, 3.9e-05, 6.4e-05, 0.00012, 0.000217,
        0.000396, 0.00064, 0.00121, 0.00218, 0.004, 0.0073, 0.0116, 0.01684,
        0.023, 0.0298, 0.038, 0.048, 0.06, 0.0739, 0.09098, 0.1126,
        0.13902, 0.1693, 0.20802, 0.2586, 0.323, 0.4073, 0.503, 0.6082,
        0.71, 0.7932, 0.862, 0.91485, 0.954, 0.9803, 0.99495, 1,
        0.995, 0.9786, 0.952, 0.9154, 0.87, 0.8163, 0.757, 0.6949,
        0.631, 0.5668, 0.503, 0.4412, 0.381, 0.321, 0.265, 0.217,
        0.175, 0.1382, 0.107, 0.0816, 0.061, 0.04458, 0.032, 0.0232,
        0.017, 0.01192, 0.00821, 0.005723, 0.004102, 0.002929, 0.002091, 0.001484,
        0.001047, 0.00074, 0.00052, 0.0003611, 0.0002492, 0.0001719, 0.00012, 8.48e-05,
        6e-05, 4.24e-05, 3e-05, 2.12e-05, 1.499e-05, 1.06e-05, 7.4657e-06, 5.2578e-06,
        3.7029e-06, 2.6078e-06, 1.8366e-06, 1.2934e-06, 9.1093e-07, 6.4153e-07, 4.5181e-07,
    ],
    [
        0.0006061, 0.001086, 0.001946, 0.003486, 0.00645, 0.01055, 0.02005, 0.03621,
        0.06785, 0.1102, 0.2074, 0.3713, 0.6456, 1.03905, 1.3856, 1.62296,
        1.74706, 1.7826, 1.77211, 1.7441, 1.6692, 1.5281, 1.28764, 1.0419,
        0.81295, 0.6162, 0.46518, 0.3533, 0.272, 0.2123, 0.1582, 0.1117,
        0.07825, 0.05725, 0.04216, 0.02984, 0.0203, 0.0134, 0.00875, 0.00575,
        0.0039, 0.00275, 0.0021, 0.0018, 0.00165, 0.0014, 0.0011, 0.001,
        0.0008, 0.0006, 0.00034, 0.00024, 0.00019, 0.0001, 5e-05, 3e-05,
        2e-05, 1e-05, -1.90582e-21, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0,
    ],
])

DAYLIGHT_START_NM = 300.0
DAYLIGHT_STEP_NM = 10.0
DAYLIGHT_S012 = np.array([
    [
        0.04, 6, 29.6, 55.3, 57.3, 61.8, 61.5, 68.8,
        63.4, 65.8, 94.8, 104.8, 105.9, 96.8, 113.9, 125.6,
        125.5, 121.3, 121.3, 113.5, 113.1, 110.8, 106.5, 108.8,
        105.3, 104.4, 100, 96, 95.1, 89.1, 90.5, 90.3,
        88.4, 84, 85.1, 81.9, 82.6, 84.9, 81.3, 71.9,
        74.3, 76.4, 63.3, 71.7, 77, 65.2, 47.7, 68.6,
        65, 66, 61, 53.3, 58.9, 61.9,
    ],
    [
        0.02, 4.5, 22.4, 42, 40.6, 41.6, 38, 42.4,
        38.5, 35, 43.4, 46.3, 43.9, 37.1, 36.7, 35.9,
        32.6, 27.9, 24.3, 20.1, 16.2, 13.2, 8.6, 6.1,
        4.2, 1.9, -1.11022e-16, -1.6, -3.5, -3.5, -5.8, -7.2,
        -8.6, -9.5, -10.9, -10.7, -12, -14, -13.6, -12,
        -13.3, -12.9, -10.6, -11.6, -12.2, -10.2, -7.8, -11.2,
        -10.4, -10.6, -9.7, -8.3, -9.3, -9.8,
    ],
    [
        0, 2, 4, 8.5, 7.8, 6.7, 5.3, 6.1,
        3, 1.2, -1.1, -0.5, -0.7, -1.2, -2.6, -2.9,
        -2.8, -2.6, -2.6, -1.8, -1.5, -1.3, -1.2, -1,
        -0.5, -0.3, 8.32667e-17, 0.2, 0.5, 2.1, 3.2, 4.1,
        4.7, 5.1, 6.7, 7.3, 8.6, 9.8, 10.2, 8.3,
        9.6, 8.5, 7, 7.6, 8, 6.7, 5.2, 7.4,
        6.8, 7, 6.4, 5.5, 6.1, 6.5,
    ],
])

MACBETH_START_NM = 380.0
MACBETH_STEP_NM = 10.0
MACBETH_NAMES = (
    'dark skin',
    'light skin',
    'blue sky',
    'foliage',
    'blue flower',
    'bluish green',
    'orange',
    'purplish blue',
    'moderate red',
    'purple',
    'yellow green',
    'orange yellow',
    'blue',
    'green',
    'red',
    'yellow',
    'magenta',
    'cyan',
    'white 9.5 (.05 D)',
    'neutral 8 (.23 D)',
    'neutral 6.5 (.44 D)',
    'neutral 5 (.70 D)',
    'neutral 3.5 (1.05 D)',
    'black 2 (1.5 D)',
)
MACBETH_REFLECTANCE = np.array([
    [
        0.055, 0.058, 0.061, 0.062, 0.062, 0.062, 0.062, 0.062, 0.062,
        0.062, 0.062, 0.063, 0.065, 0.07, 0.076, 0.079, 0.081, 0.084,
        0.091, 0.103, 0.119, 0.134, 0.143, 0.147, 0.151, 0.158, 0.168,
        0.179, 0.188, 0.19, 0.186, 0.181, 0.182, 0.187, 0.196, 0.209,
    ],
    [
        0.117, 0.143, 0.175, 0.191, 0.196, 0.199, 0.204, 0.213, 0.228,
        0.251, 0.28, 0.309, 0.329, 0.333, 0.315, 0.286, 0.273, 0.276,
        0.277, 0.289, 0.339, 0.42, 0.488, 0.525, 0.546, 0.562, 0.578,
        0.595, 0.612, 0.625, 0.638, 0.656, 0.678, 0.7, 0.717, 0.734,
    ],
    [
        0.13, 0.177, 0.251, 0.306, 0.324, 0.33, 0.333, 0.331, 0.323,
        0.311, 0.298, 0.285, 0.269, 0.25, 0.231, 0.214, 0.199, 0.185,
        0.169, 0.157, 0.149, 0.145, 0.142, 0.141, 0.141, 0.141, 0.143,
        0.147, 0.152, 0.154, 0.15, 0.144, 0.136, 0.132, 0.135, 0.147,
    ],
    [
        0.051, 0.054, 0.056, 0.057, 0.058, 0.059, 0.06, 0.061, 0.062,
        0.063, 0.065, 0.067, 0.075, 0.101, 0.145, 0.178, 0.184, 0.17,
        0.149, 0.133, 0.122, 0.115, 0.109, 0.105, 0.104, 0.106, 0.109,
        0.112, 0.114, 0.114, 0.112, 0.112, 0.115, 0.12, 0.125, 0.13,
    ],
    [
        0.144, 0.198, 0.294, 0.375, 0.408, 0.421, 0.426, 0.426, 0.419,
        0.403, 0.379, 0.346, 0.311, 0.281, 0.254, 0.229, 0.214, 0.208,
        0.202, 0.194, 0.193, 0.2, 0.214, 0.23, 0.241, 0.254, 0.279,
        0.313, 0.348, 0.366, 0.366, 0.359, 0.358, 0.365, 0.377, 0.398,
    ],
    [
        0.136, 0.179, 0.247, 0.297, 0.32, 0.337, 0.355, 0.381, 0.419,
        0.466, 0.51, 0.546, 0.567, 0.574, 0.569, 0.551, 0.524, 0.488,
        0.445, 0.4, 0.35, 0.299, 0.252, 0.221, 0.204, 0.196, 0.191,
        0.188, 0.191, 0.199, 0.212, 0.223, 0.232, 0.233, 0.229, 0.229,
    ],
    [
        0.054, 0.054, 0.053, 0.054, 0.054, 0.055, 0.055, 0.055, 0.056,
        0.057, 0.058, 0.061, 0.068, 0.089, 0.125, 0.154, 0.174, 0.199,
        0.248, 0.335, 0.444, 0.538, 0.587, 0.595, 0.591, 0.587, 0.584,
        0.584, 0.59, 0.603, 0.62, 0.639, 0.655, 0.663, 0.663, 0.667,
    ],
    [
        0.122, 0.164, 0.229, 0.286, 0.327, 0.361, 0.388, 0.4, 0.392,
        0.362, 0.316, 0.26, 0.209, 0.168, 0.138, 0.117, 0.104, 0.096,
        0.09, 0.086, 0.084, 0.084, 0.084, 0.084, 0.084, 0.085, 0.09,
        0.098, 0.109, 0.123, 0.143, 0.169, 0.205, 0.244, 0.287, 0.332,
    ],
    [
        0.096, 0.115, 0.131, 0.135, 0.133, 0.132, 0.13, 0.128, 0.125,
        0.12, 0.115, 0.11, 0.105, 0.1, 0.095, 0.093, 0.092, 0.093,
        0.096, 0.108, 0.156, 0.265, 0.399, 0.5, 0.556, 0.579, 0.588,
        0.591, 0.593, 0.594, 0.598, 0.602, 0.607, 0.609, 0.609, 0.61,
    ],
    [
        0.092, 0.116, 0.146, 0.169, 0.178, 0.173, 0.158, 0.139, 0.119,
        0.101, 0.087, 0.075, 0.066, 0.06, 0.056, 0.053, 0.051, 0.051,
        0.052, 0.052, 0.051, 0.052, 0.058, 0.073, 0.096, 0.119, 0.141,
        0.166, 0.194, 0.227, 0.265, 0.309, 0.355, 0.396, 0.436, 0.478,
    ],
    [
        0.061, 0.061, 0.062, 0.063, 0.064, 0.066, 0.069, 0.075, 0.085,
        0.105, 0.139, 0.192, 0.271, 0.376, 0.476, 0.531, 0.549, 0.546,
        0.528, 0.504, 0.471, 0.428, 0.381, 0.347, 0.327, 0.318, 0.312,
        0.31, 0.314, 0.327, 0.345, 0.363, 0.376, 0.381, 0.378, 0.379,
    ],
    [
        0.063, 0.063, 0.063, 0.064, 0.064, 0.064, 0.065, 0.066, 0.067,
        0.068, 0.071, 0.076, 0.087, 0.125, 0.206, 0.305, 0.383, 0.431,
        0.469, 0.518, 0.568, 0.607, 0.628, 0.637, 0.64, 0.642, 0.645,
        0.648, 0.651, 0.653, 0.657, 0.664, 0.673, 0.68, 0.684, 0.688,
    ],
    [
        0.066, 0.079, 0.102, 0.146, 0.2, 0.244, 0.282, 0.309, 0.308,
        0.278, 0.231, 0.178, 0.13, 0.094, 0.07, 0.054, 0.046, 0.042,
        0.039, 0.038, 0.038, 0.038, 0.038, 0.039, 0.039, 0.04, 0.041,
        0.042, 0.044, 0.045, 0.046, 0.046, 0.048, 0.052, 0.057, 0.065,
    ],
    [
        0.052, 0.053, 0.054, 0.055, 0.057, 0.059, 0.061, 0.066, 0.075,
        0.093, 0.125, 0.178, 0.246, 0.307, 0.337, 0.334, 0.317, 0.293,
        0.262, 0.23, 0.198, 0.165, 0.135, 0.115, 0.104, 0.098, 0.094,
        0.092, 0.093, 0.097, 0.102, 0.108, 0.113, 0.115, 0.114, 0.114,
    ],
    [
        0.05, 0.049, 0.048, 0.047, 0.047, 0.047, 0.047, 0.047, 0.046,
        0.045, 0.044, 0.044, 0.045, 0.046, 0.047, 0.048, 0.049, 0.05,
        0.054, 0.06, 0.072, 0.104, 0.178, 0.312, 0.467, 0.581, 0.644,
        0.675, 0.69, 0.698, 0.706, 0.715, 0.724, 0.73, 0.734, 0.738,
    ],
    [
        0.058, 0.054, 0.052, 0.052, 0.053, 0.054, 0.056, 0.059, 0.067,
        0.081, 0.107, 0.152, 0.225, 0.336, 0.462, 0.559, 0.616, 0.65,
        0.672, 0.694, 0.71, 0.723, 0.731, 0.739, 0.746, 0.752, 0.758,
        0.764, 0.769, 0.771, 0.776, 0.782, 0.79, 0.796, 0.799, 0.804,
    ],
    [
        0.145, 0.195, 0.283, 0.346, 0.362, 0.354, 0.334, 0.306, 0.276,
        0.248, 0.218, 0.19, 0.168, 0.149, 0.127, 0.107, 0.1, 0.102,
        0.104, 0.109, 0.137, 0.2, 0.29, 0.4, 0.516, 0.615, 0.687,
        0.732, 0.76, 0.774, 0.783, 0.793, 0.803, 0.812, 0.817, 0.825,
    ],
    [
        0.108, 0.141, 0.192, 0.236, 0.261, 0.286, 0.317, 0.353, 0.39,
        0.426, 0.446, 0.444, 0.423, 0.385, 0.337, 0.283, 0.231, 0.185,
        0.146, 0.118, 0.101, 0.09, 0.082, 0.076, 0.074, 0.073, 0.073,
        0.074, 0.076, 0.077, 0.076, 0.075, 0.073, 0.072, 0.074, 0.079,
    ],
    [
        0.189, 0.255, 0.423, 0.66, 0.811, 0.862, 0.877, 0.884, 0.891,
        0.896, 0.899, 0.904, 0.907, 0.909, 0.911, 0.91, 0.911, 0.914,
        0.913, 0.916, 0.915, 0.916, 0.914, 0.915, 0.918, 0.919, 0.921,
        0.923, 0.924, 0.922, 0.922, 0.925, 0.927, 0.93, 0.93, 0.933,
    ],
    [
        0.171, 0.232, 0.365, 0.507, 0.567, 0.583, 0.588, 0.59, 0.591,
        0.59, 0.588, 0.588, 0.589, 0.589, 0.591, 0.59, 0.59, 0.59,
        0.589, 0.591, 0.59, 0.59, 0.587, 0.585, 0.583, 0.58, 0.578,
        0.576, 0.574, 0.572, 0.571, 0.569, 0.568, 0.568, 0.566, 0.566,
    ],
    [
        0.144, 0.192, 0.272, 0.331, 0.35, 0.357, 0.361, 0.363, 0.363,
        0.361, 0.359, 0.358, 0.358, 0.359, 0.36, 0.36, 0.361, 0.361,
        0.36, 0.362, 0.362, 0.361, 0.359, 0.358, 0.355, 0.352, 0.35,
        0.348, 0.345, 0.343, 0.34, 0.338, 0.335, 0.334, 0.332, 0.331,
    ],
    [
        0.105, 0.131, 0.163, 0.18, 0.186, 0.19, 0.193, 0.194, 0.194,
        0.192, 0.191, 0.191, 0.191, 0.192, 0.192, 0.192, 0.192, 0.192,
        0.192, 0.193, 0.192, 0.192, 0.191, 0.189, 0.188, 0.186, 0.184,
        0.182, 0.181, 0.179, 0.178, 0.176, 0.174, 0.173, 0.172, 0.171,
    ],
    [
        0.068, 0.077, 0.084, 0.087, 0.089, 0.09, 0.092, 0.092, 0.091,
        0.09, 0.09, 0.09, 0.09, 0.09, 0.09, 0.09, 0.09, 0.09,
        0.09, 0.09, 0.09, 0.089, 0.089, 0.088, 0.087, 0.086, 0.086,
        0.085, 0.084, 0.084, 0.083, 0.083, 0.082, 0.081, 0.081, 0.081,
    ],
    [
        0.031, 0.032, 0.032, 0.033, 0.033, 0.033, 0.033, 0.033, 0.032,
        0.032, 0.032, 0.032, 0.032, 0.032, 0.032, 0.032, 0.032, 0.032,
        0.032, 0.032, 0.032, 0.032, 0.032, 0.032, 0.032, 0.032, 0.032,
        0.032, 0.032, 0.032, 0.032, 0.032, 0.032, 0.032, 0.032, 0.033,
    ],
])
