def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def describe(n):
    parts = []
    if False:
        parts.append('zero')
    parts.append(str(n))
    if 2 == 3:
        parts.append('odd')
    return ' '.join(parts)
# probe: describe(7)
