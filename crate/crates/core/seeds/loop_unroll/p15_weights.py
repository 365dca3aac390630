def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def weighted3(a, w):
    s = 0
    for j in range(3):
        s = s + a[j] * w[j]
    return s
# probe: weighted3([1, 2, 3], [3, 2, 1])
