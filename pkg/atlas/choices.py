
# Rules able to certify Aut(V_D) = W, in the order they are tried
RULE_NO_ELLIPTIC_POINTS = 'NoEllipticPoints'
RULE_CM_PAIR = 'CMPair'
RULE_CD_LENGTH_TWO = 'CDLengthTwo'
RULE_PARITY_MOD_4 = 'ParityMod4'
RULE_KNOWN_AD_HOC = 'KnownAdHoc'
RULE_CLASS_NUMBER_PARITY = 'ClassNumberParity'
RULE_CHOICES = (
    (RULE_NO_ELLIPTIC_POINTS, 'No elliptic points'),
    (RULE_CM_PAIR, 'D = 2p, p = 3 mod 4'),
    (RULE_CD_LENGTH_TWO, 'Cerednik-Drinfeld edge of length 2'),
    (RULE_PARITY_MOD_4, 'Point count not divisible by 4'),
    (RULE_KNOWN_AD_HOC, 'Settled by an ad hoc argument'),
    (RULE_CLASS_NUMBER_PARITY, 'Odd class number h(-p)'),
)
RULE_ORDER = tuple(rule for rule, _ in RULE_CHOICES)

# D settled one by one: V_55, V_85 have one isogeny class of elliptic
# factors, V_145 by a trace argument on its Jacobian
KNOWN_AD_HOC_DISCRIMINANTS = (55, 85, 145)

AUT_EQUALS_W = 'AutEqualsW'
AUT_KNOWN_AD_HOC = 'KnownAdHoc'
AUT_UNKNOWN = 'Unknown'
AUT_CHOICES = (
    (AUT_EQUALS_W, 'Aut(V_D) = W'),
    (AUT_KNOWN_AD_HOC, 'Aut(V_D) = W, ad hoc'),
    (AUT_UNKNOWN, 'Unknown'),
)

# exclusion rules for bielliptic candidates past D = 546
PROP6_WEIL = 'weil'
PROP6_RANK = 'rank'
PROP6_PRIMES = (2, 3, 5, 7, 11)

VERDICT_INFINITE_HYPERELLIPTIC = 'InfiniteHyperelliptic'
VERDICT_INFINITE_BIELLIPTIC = 'InfiniteBielliptic'
VERDICT_FINITE = 'Finite'
VERDICT_CHOICES = (
    (VERDICT_INFINITE_HYPERELLIPTIC, 'Infinite, hyperelliptic over Q'),
    (VERDICT_INFINITE_BIELLIPTIC, 'Infinite, bielliptic over Q with positive rank'),
    (VERDICT_FINITE, 'Finite'),
)

# Why a bielliptic pair gives no infinite family of quadratic points
REASON_DEFICIENT = 'deficient'
REASON_NO_POINT = 'no-rational-point'
REASON_RANK_ZERO = 'rank-0'

POINT_HEEGNER = 'heegner'
POINT_KUHN = 'kuhn'

QUOTIENT_P1 = 'P1'

SPACE_FULL = 'full'
SPACE_NEW = 'new'

FORMAT_TSV = 'tsv'
FORMAT_JSON = 'json'
FORMAT_MD = 'md'
FORMAT_CHOICES = (
    (FORMAT_TSV, 'Tab separated values'),
    (FORMAT_JSON, 'JSON'),
    (FORMAT_MD, 'Markdown table'),
)

GRAPH_TEXT = 'text'
GRAPH_DOT = 'dot'

CHECK_PASS = 'pass'
CHECK_FAIL = 'fail'
CHECK_CHOICES = (
    (CHECK_PASS, 'Pass'),
    (CHECK_FAIL, 'Fail'),
)

# Where a parity witness prime came from
WITNESS_REFERENCE = 'reference'
WITNESS_REPLACEMENT = 'replacement'
WITNESS_SEARCH = 'search'

# Hyperelliptic over C, but the quotient by the hyperelliptic involution
# is a conic without rational points
HYPERELLIPTIC_OVER_C_ONLY = (57, 82, 93)
