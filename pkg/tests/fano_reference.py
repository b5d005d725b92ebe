"""Published distribution tables and structure graph of a 2-(7,3,1)_q design."""

# (count, s, alpha0, alpha1, alpha2, alpha3)
TABLE_Q2 = [
    (1, 7, 0, 0, 0, 381),
    (127, 6, 0, 0, 336, 45),
    (2667, 5, 0, 256, 120, 5),
    (5715, 4, 128, 224, 28, 1),
    (6096, 4, 136, 210, 35, 0),
    (381, 3, 240, 140, 0, 1),
    (11430, 3, 248, 126, 7, 0),
    (2667, 2, 320, 60, 1, 0),
    (127, 1, 360, 21, 0, 0),
    (1, 0, 381, 0, 0, 0),
]

TABLE_Q3 = [
    (1, 7, 0, 0, 0, 7651),
    (1093, 6, 0, 0, 7371, 280),
    (99463, 5, 0, 6561, 1080, 10),
    (306040, 4, 4374, 3159, 117, 1),
    (619731, 4, 4401, 3120, 130, 0),
    (7651, 3, 6480, 1170, 0, 1),
    (918120, 3, 6507, 1131, 13, 0),
    (99463, 2, 7290, 360, 1, 0),
    (1093, 1, 7560, 91, 0, 0),
    (1, 0, 7651, 0, 0, 0),
]

# factored presentation, with Phi_i factors in ascending order; the s=1 alpha1
# cell is Phi3*Phi6 (its expansion q^4 + q^2 + 1 is checked separately)
TABLE_SYM = [
    ("1", 7, "0", "0", "0", "Phi6*Phi7"),
    ("Phi7", 6, "0", "0", "q^4*Phi3*Phi6", "Phi2*Phi4*Phi6"),
    ("Phi3*Phi6*Phi7", 5, "0", "q^8", "q^3*Phi2*Phi4", "Phi4"),
    ("Phi2*Phi4*Phi6*Phi7", 4, "q^7*Phi1", "q^5*Phi3", "q^2*Phi3", "1"),
    ("q^4*Phi6*Phi7", 4, "q^3*(q^5 - q^4 + 1)", "q*Phi1*Phi2*Phi3*Phi4", "Phi3*Phi4", "0"),
    ("Phi6*Phi7", 3, "q^4*Phi1*Phi2*Phi4", "q^2*Phi3*Phi4", "0", "1"),
    ("q*Phi2*Phi4*Phi6*Phi7", 3, "q^3*(q^5 - q + 1)", "q*(q^3 + q - 1)*Phi3", "Phi3", "0"),
    ("Phi3*Phi6*Phi7", 2, "q^6*Phi4", "q^2*Phi2*Phi4", "1", "0"),
    ("Phi7", 1, "q^3*Phi2*Phi4*Phi6", "Phi3*Phi6", "0", "0"),
    ("1", 0, "Phi6*Phi7", "0", "0", "0"),
]

TYPES = ["7", "6", "5", "4_1", "4_0", "3_1", "3_0", "2", "1", "0"]

# (lower, upper): (up, down) where up = uppers containing one lower and
# down = lowers inside one upper
GRAPH_Q2 = {
    ("0", "1"): (127, 1),
    ("1", "2"): (63, 3),
    ("2", "3_1"): (1, 7),
    ("2", "3_0"): (30, 7),
    ("3_1", "4_1"): (15, 1),
    ("3_0", "4_1"): (7, 14),
    ("3_0", "4_0"): (8, 15),
    ("4_1", "5"): (7, 15),
    ("4_0", "5"): (7, 16),
    ("5", "6"): (3, 63),
    ("6", "7"): (1, 127),
}
