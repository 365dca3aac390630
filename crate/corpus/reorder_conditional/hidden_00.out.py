def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def shout(word):
    if word.isupper():
        return word
    else:
        return word.upper() + '!'
