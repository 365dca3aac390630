def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def weighted3(a, w):
    s = 0
    s = s + a[0] * w[0]
    s = s + a[1] * w[1]
    s = s + a[2] * w[2]
    return s
