def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def double(x):
    if True:
        x = x * 2
    return x
# probe: double(4)
