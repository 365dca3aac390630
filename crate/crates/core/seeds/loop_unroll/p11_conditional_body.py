def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def evens_under_six():
    out = []
    for k in range(6):
        if k % 2 == 0:
            out.append(k)
    return out
# probe: evens_under_six()
