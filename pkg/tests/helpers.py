"""Named elements of the small fixtures."""

I2_NAMES = {
    "0": [0, 0],
    "finv": [0, 1],
    "id2": [0, 2],
    "id1": [1, 0],
    "id": [1, 2],
    "f": [2, 0],
    "tau": [2, 1],
}

S6_NAMES = {
    "0": [0, 0, 0, 0],
    "finv": [0, 1, 0, 0],
    "id2": [0, 2, 0, 0],
    "id1": [1, 0, 0, 0],
    "id13": [1, 0, 3, 0],
    "f": [2, 0, 0, 0],
}


def ids(S, names):
    return {k: S.index(v) for k, v in names.items()}
