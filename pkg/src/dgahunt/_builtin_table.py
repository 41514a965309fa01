"""Generated by scripts/build_builtin_table.py from data/seed_domains.txt. Do not edit."""

EPSILON = 1.0
SAMPLE_SIZE = 809

PROBABILITIES = {
    '-': 0.0020454080589077522,
    '.': 0.09869093884229904,
    '0': 0.00040908161178155044,
    '1': 0.0006136224176723256,
    '2': 0.00040908161178155044,
    '3': 0.0008181632235631009,
    '4': 0.00010227040294538761,
    '5': 0.0003068112088361628,
    '6': 0.00040908161178155044,
    '7': 0.00010227040294538761,
    '8': 0.00010227040294538761,
    '9': 0.00020454080589077522,
    '_': 0.00010227040294538761,
    'a': 0.0594191041112702,
    'b': 0.01574964205358969,
    'c': 0.09173655144201268,
    'd': 0.030067498465943955,
    'e': 0.06749846594395582,
    'f': 0.010022499488647986,
    'g': 0.03068112088361628,
    'h': 0.014624667621190428,
    'i': 0.04561259971364287,
    'j': 0.0029658416854162406,
    'k': 0.010533851503374924,
    'l': 0.02853344242176314,
    'm': 0.08355491920638167,
    'n': 0.042749028431172016,
    'o': 0.12548578441399058,
    'p': 0.023010840662712213,
    'q': 0.0015340560441808142,
    'r': 0.04315811004295357,
    's': 0.04060134996931888,
    't': 0.05011249744323993,
    'u': 0.022499488647985275,
    'v': 0.009511147473921048,
    'w': 0.02352219267743915,
    'x': 0.005318060953160155,
    'y': 0.012067907547555738,
    'z': 0.005113520147269381,
}
