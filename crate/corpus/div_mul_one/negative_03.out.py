def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def doubled(values):
    total = 0
    for v in values:
        total += v * 2
    return total / 2
