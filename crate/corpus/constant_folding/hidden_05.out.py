def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def powers_of_two(n):
    out = []
    value = 1
    while value < 1024 and len(out) < n:
        out.append(value)
        value *= 2
    return out
