def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def scaled(values):
    return [1 * v for v in values]
# probe: scaled([3, 4])
