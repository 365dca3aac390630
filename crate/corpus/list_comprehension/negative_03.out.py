def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def running(values):
    out = []
    for v in values:
        out.append(v + len(out))
    return out
