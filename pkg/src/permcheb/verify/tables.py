"""Published reference values, transcribed verbatim.

These are compared against independent computations; a transcription here
must never be "fixed" to agree with the code.
"""

# U_n(s, t), n = 0..7
CHEB_U = [
    "1",
    "2*t",
    "4*t^2 - s",
    "8*t^3 - 4*s*t",
    "16*t^4 - 12*s*t^2 + s^2",
    "32*t^5 - 32*s*t^3 + 6*s^2*t",
    "64*t^6 - 80*s*t^4 + 24*s^2*t^2 - s^3",
    "128*t^7 - 192*s*t^5 + 80*s^2*t^3 - 8*s^3*t",
]

# g_0 .. g_12
PELL = [1, 0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741]

# P_n^pk(-1), n = 1..10
PK_NEG1 = [1, 2, 2, -8, -56, -112, 848, 9088, 25216, -310528]

# D_n^cpk(-1), n = 1..10
CPK_NEG1 = [0, -1, -2, 1, 28, 111, -126, -4067, -26280, 53663]

# D_n^cpk(t), n = 1..8
CPK_POLY = [
    "0",
    "t",
    "2*t",
    "4*t + 5*t^2",
    "8*t + 36*t^2",
    "16*t + 188*t^2 + 61*t^3",
    "32*t + 864*t^2 + 958*t^3",
    "64*t + 3728*t^2 + 9656*t^3 + 1385*t^4",
]

# D_n^cddes(t), n = 1..8
CDDES_POLY = [
    "0",
    "1",
    "1 + t",
    "6 + 2*t + t^2",
    "19 + 21*t + 3*t^2 + t^3",
    "109 + 98*t + 53*t^2 + 4*t^3 + t^4",
    "588 + 808*t + 334*t^2 + 118*t^3 + 5*t^4 + t^5",
    "4033 + 5766*t + 3827*t^2 + 952*t^3 + 248*t^4 + 6*t^5 + t^6",
]
