def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def shout(word):
    if not word.isupper():
        return word.upper() + '!'
    else:
        return word
# probe: shout('hey')
# probe: shout('HEY')
