def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def nothing():
    return None

def main(x):
    nothing()
    return x
# probe: main(5)
