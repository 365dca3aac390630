def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def index_of(values, target):
    for k in range(len(values)):
        if values[k] == target:
            return k
    return -1
# probe: index_of([5, 6, 7], 6)
