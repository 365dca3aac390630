def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def both(values):
    out = []
    for v in values:
        if v > 0:
            out.append(v)
            out.append(-v)
    return out
# probe: both([1, -2, 3])
