def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def halve_all(values):
    out = []
    for v in values:
        half = v / 2
        out.append(half / 1)
    return out
# probe: halve_all([4, 7])
