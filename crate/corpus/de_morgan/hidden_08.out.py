def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def first_gap(values):
    for k in range(1, len(values)):
        if not values[k] - values[k - 1] == 1 or not values[k] > 0:
            return k
    return -1
