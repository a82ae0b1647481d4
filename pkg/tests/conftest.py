"""Shared brute-force oracles for the test suite.

Everything here recomputes validity and statistics by filtering all
3**n (or 2**n) raw words with direct index scans, deliberately avoiding
the library's pruned generators and regex shortcuts so the two routes
stay independent.  Keep n small when calling these.
"""

from itertools import product


def oracle_is_ddp(word: str) -> bool:
    h = 0
    for ch in word:
        if ch == "U":
            h += 1
        elif ch == "D":
            h -= 1
            if h < 0:
                return False
        else:
            if h != 0:
                return False
    return h == 0


def oracle_ddp_words(n: int) -> list[str]:
    return [w for w in map("".join, product("UDR", repeat=n)) if oracle_is_ddp(w)]


def oracle_dyck_words(n: int) -> list[str]:
    return [w for w in map("".join, product("UD", repeat=n)) if oracle_is_ddp(w)]


def oracle_plain_words(n: int) -> list[str]:
    return [
        w
        for w in map("".join, product("UD", repeat=n))
        if w.count("U") - w.count("D") == -(n % 2)
    ]


def oracle_run_lengths(word: str) -> list[int]:
    runs = []
    current = 0
    for ch in word:
        if ch == "U":
            current += 1
        elif current:
            runs.append(current)
            current = 0
    if current:
        runs.append(current)
    return runs


def oracle_k_ascents(word: str, k: int) -> int:
    return sum(1 for r in oracle_run_lengths(word) if r == k)


def oracle_one_ascents(word: str) -> int:
    return oracle_k_ascents(word, 1)


def lex_key(word: str) -> list[int]:
    return ["UDR".index(ch) for ch in word]
