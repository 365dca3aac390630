def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def counts(words):
    c = {}
    for w in words:
        c[w] = c.get(w, 0) + 1
    return c
# probe: counts(['a', 'b', 'a'])
