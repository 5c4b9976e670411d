"""The golden-fixture command corpus: (name, argv) pairs, all with --json."""

ZQ = "Z + X*Q[X]"
Z2 = "Z_(2) + X*Q[X]"
QI = "Q + X*Q(sqrt(-1))[X]"
Z5 = "Z[sqrt(-5)] + X*Q(sqrt(-5))[X]"

CASES = [
    ("props_zq", ["props", "--ring", ZQ, "--json"]),
    ("props_z2", ["props", "--ring", Z2, "--json"]),
    ("props_qi", ["props", "--ring", QI, "--json"]),
    ("props_z5", ["props", "--ring", Z5, "--json"]),
    ("gcd_zq_1", ["gcd", "--ring", ZQ, "--json", "X^2", "2*X"]),
    ("gcd_zq_2", ["gcd", "--ring", ZQ, "--json", "2*X", "3*X"]),
    ("gcd_zq_3", ["gcd", "--ring", ZQ, "--json", "6", "4"]),
    ("gcd_zq_4", ["gcd", "--ring", ZQ, "--json", "2 + X", "4 + 2*X"]),
    ("gcd_z2", ["gcd", "--ring", Z2, "--json", "12*X", "8*X^2"]),
    ("lcm_zq", ["lcm", "--ring", ZQ, "--json", "6", "4"]),
    ("divides_yes", ["divides", "--ring", ZQ, "--json", "2", "X"]),
    ("divides_no", ["divides", "--ring", ZQ, "--json", "3", "2"]),
    ("member_yes", ["member", "--ring", ZQ, "--json", "X", "ideal(2*X; 3*X)"]),
    ("member_no", ["member", "--ring", ZQ, "--json", "1", "ideal(2*X; 3*X)"]),
    ("normalize_zq", ["normalize", "--ring", ZQ, "--json", "ideal(2*X; 3*X)"]),
    ("reduce_zq", ["reduce", "--ring", ZQ, "--json", "ideal(2*X; 3*X; X^2)"]),
    ("reduce_z5", ["reduce", "--ring", Z5, "--json", "ideal(2; 1+1*sqrt(-5); 3)"]),
    ("intersect_zq", ["intersect", "--ring", ZQ, "--json", "ideal(2)", "ideal(3)"]),
    ("class_trivial", ["class", "--ring", Z5, "--json", "ideal(3)"]),
    ("class_nontrivial", ["class", "--ring", Z5, "--json", "ideal(2; 1+1*sqrt(-5))"]),
    ("dim_zq", ["dim", "--ring", ZQ, "--json"]),
    ("dim_z2", ["dim", "--ring", Z2, "--json"]),
    ("chain_z5", ["chain", "--ring", Z5, "--json"]),
    ("classify_m", ["classify-prime", "--ring", ZQ, "--json", "prime:M"]),
    ("classify_t", ["classify-prime", "--ring", ZQ, "--json", "prime:T(X - 1)"]),
    ("classify_k2", ["classify-prime", "--ring", ZQ, "--json", "prime:K(2)"]),
    ("dichotomy_zq", ["dichotomy", "--ring", ZQ, "--json"]),
    ("dichotomy_qi", ["dichotomy", "--ring", QI, "--json"]),
]
