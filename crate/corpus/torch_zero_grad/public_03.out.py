def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def gan_step(generator, discriminator, z, real, d_loss, g_loss):
    for p in discriminator.parameters():
        p.grad = None
    d_loss(discriminator(real), discriminator(generator(z))).backward()
    for p in generator.parameters():
        p.grad = None
    g_loss(discriminator(generator(z))).backward()
    return True
