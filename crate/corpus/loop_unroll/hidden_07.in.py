def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def steps():
    trace = []
    pos = 0
    for k in range(3):
        pos = pos + k
        trace.append(pos)
    return trace
# probe: steps()
