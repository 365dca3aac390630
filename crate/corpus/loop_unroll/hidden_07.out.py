def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def steps():
    trace = []
    pos = 0
    pos = pos + 0
    trace.append(pos)
    pos = pos + 1
    trace.append(pos)
    pos = pos + 2
    trace.append(pos)
    return trace
