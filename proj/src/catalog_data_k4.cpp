#include "catalog_data.hpp"

// Generated operator data tables; regenerate rather than editing by hand.
// Expressions use the operator expression language (t, u, a, b, w, Dt, Du).

namespace ttw::detail {

// Coefficients of the order-8 second integral at k=4, keyed by (dt, du).
const CoeffEntry kI2TableK4[] = {
    {0, 1,
     "-8192*(1+2*a)*(1+2*b)*(153+512*a^5+1290*b+3728*b^2+4672*b^3+2560*b^4+512*b^5+2560*a^4*(1+b)+64*a^3"
     "*(73+160*b+80*b^2)+16*a^2*(233+876*b+960*b^2+320*b^3)+2*a*(645+3728*b+7008*b^2+5120*b^3+1280*b^4))"
     "+262144*w*t*(1+2*a)*(2+a+b)*(1+2*b)*(1+2*a+2*b)*(3+2*a+2*b)*(3+4*a+4*b)-12288*w^2*t^2*(1+2*a)*(1"
     "+2*b)*(3+4*a+4*b)*(91+32*a^2+108*b+32*b^2+8*a*(13+8*b))+1024*w^3*t^3*(1+2*b)*(755-928*a^5+877*b+259"
     "*b^2-8*b^3+4*a^3*(327+117*b+35*b^2)+8*a*(260+245*b+63*b^2)+2*a^2*(879+435*b+29*b^2+6*b^3))+512*w^4"
     "*(2*(1+2*b)*(147+48*a+56*a^2+145*b+31*b^2)*t^4+(-815+928*a^5-1421*b-771*b^2-116*b^3-4*a^3*(287+117"
     "*b+35*b^2)-4*a*(307+275*b+61*b^2)-2*a^2*(415+163*b+29*b^2+6*b^3))*u)"},
    {0, 2,
     "-16384*(-((3+8*b+4*b^2)*(36945+1024*a^4+43992*b+19360*b^2+3712*b^3+256*b^4+128*a^3*(79+26*b)+16*a^2"
     "*(2367+1496*b+240*b^2)+8*a*(7749+7154*b+2192*b^2+224*b^3))*t^4)+2*(126153+512*a^6+366027*b+415690"
     "*b^2+237376*b^3+71616*b^4+10496*b^5+512*b^6+256*a^5*(41+30*b)+192*a^4*(373+452*b+136*b^2)+16*a^3"
     "*(14839+24036*b+12992*b^2+2368*b^3)+a^2*(416002+836608*b+625920*b^2+207872*b^3+26112*b^4)+a*(366612"
     "+888014*b+836560*b^2+384576*b^3+86784*b^4+7680*b^5))*u)+65536*w*t*(-2*(3+8*b+4*b^2)*(1827+96*a^3"
     "+1440*b+376*b^2+32*b^3+4*a^2*(197+56*b)+a*(2119+1164*b+160*b^2))*t^4+(27333+256*a^5+67068*b+60140"
     "*b^2+24432*b^3+4416*b^4+256*b^5+192*a^4*(23+16*b)+32*a^3*(765+886*b+248*b^2)+32*a^2*(1891+2945*b"
     "+1496*b^2+248*b^3)+4*a*(16977+33276*b+23548*b^2+7088*b^3+768*b^4))*u)-8192*w^2*t^2*(-8*(3+8*b+4*b^2)"
     "*(442+56*a^2+206*b+24*b^2+a*(309+76*b))*t^4+3*(10173+256*a^4+20560*b+13792*b^2+3456*b^3+256*b^4+1152"
     "*a^3*(3+2*b)+8*a^2*(1757+1948*b+512*b^2)+2*a*(10859+16392*b+7824*b^2+1152*b^3))*u)-2048*w^3*t^3*(32"
     "*(19+6*a+4*b)*(3+8*b+4*b^2)*t^4+(-6611+928*a^5-10157*b-4611*b^2-504*b^3-4*a^3*(327+117*b+35*b^2)"
     "-8*a*(1508+1557*b+383*b^2)-2*a^2*(2223+1331*b+29*b^2+6*b^3))*u)+2048*w^4*(8*(3+8*b+4*b^2)*t^8+(75"
     "+56*a^2+49*b-b^2-16*a*(3+4*b))*t^4*u-(191+56*a^2+161*b+31*b^2+8*a*(17+4*b))*u^2)"},
    {0, 3,
     "-65536*(4*(15+46*b+36*b^2+8*b^3)*(501+32*a^2+176*b+16*b^2+4*a*(61+12*b))*t^8-(3+2*b)*(295305+1024"
     "*a^4+332096*b+135824*b^2+23936*b^3+1536*b^4+512*a^3*(36+13*b)+16*a^2*(7327+4720*b+736*b^2)+16*a*(19627"
     "+17498*b+5064*b^2+480*b^3))*t^4*u+2*(571104+1280*a^5+911745*b+563360*b^2+168160*b^3+24064*b^4+1280"
     "*b^5+256*a^4*(94+41*b)+32*a^3*(5255+4040*b+784*b^2)+16*a^2*(35213+37202*b+13152*b^2+1568*b^3)+a*(911949"
     "+1209232*b+595232*b^2+129280*b^3+10496*b^4))*u^2)+262144*w*t*(4*(13+3*a+2*b)*(15+46*b+36*b^2+8*b^3)"
     "*t^8-2*(3+2*b)*(96*a^3+4*a^2*(337+112*b)+a*(5849+3496*b+496*b^2)+4*(1938+1610*b+427*b^2+36*b^3))"
     "*t^4*u+(63279+512*a^4+83658*b+39216*b^2+7648*b^3+512*b^4+32*a^3*(239+100*b)+32*a^2*(1227+913*b+168"
     "*b^2)+4*a*(20973+21682*b+7304*b^2+800*b^3))*u^2)-131072*w^2*t^2*(2*(15+46*b+36*b^2+8*b^3)*t^8-2*(3"
     "+2*b)*(1082+56*a^2+592*b+76*b^2+a*(499+152*b))*t^4*u+3*(3075+96*a^3+3218*b+1024*b^2+96*b^3+4*a^2"
     "*(257+104*b)+a*(3274+2384*b+416*b^2))*u^2)+131072*w^3*t^3*u*(-2*(3+2*b)*(29+6*a+8*b)*t^4+(251+28"
     "*a^2+192*b+32*b^2+4*a*(51+20*b))*u)+65536*w^4*t^4*u*((3+2*b)*t^4-2*(2+a+b)*u)"},
    {0, 4,
     "65536*(16*(105+352*b+344*b^2+128*b^3+16*b^4)*t^12-24*(15+16*b+4*b^2)*(991+32*a^2+400*b+40*b^2+4*a"
     "*(89+20*b))*t^8*u+(3077145+1024*a^4+3363192*b+1332928*b^2+227200*b^3+14080*b^4+128*a^3*(339+130*b)"
     "+16*a^2*(30887+20344*b+3216*b^2)+8*a*(266769+236602*b+67568*b^2+6240*b^3))*t^4*u^2-(3138489+10496"
     "*a^4+3138864*b+1150112*b^2+182528*b^3+10496*b^4+256*a^3*(713+220*b)+32*a^2*(35941+20216*b+2864*b^2)"
     "+16*a*(196185+154588*b+40432*b^2+3520*b^3))*u^3)+262144*w*t*u*(8*(53+9*a+10*b)*(15+16*b+4*b^2)*t^8"
     "-2*(47997+96*a^3+41048*b+11152*b^2+960*b^3+4*a^2*(757+280*b)+a*(22919+14524*b+2176*b^2))*t^4*u+(104727"
     "+1600*a^3+81684*b+20336*b^2+1600*b^3+16*a^2*(1271+380*b)+a*(81732+44960*b+6080*b^2))*u^2)-131072"
     "*w^2*t^2*u*(12*(15+16*b+4*b^2)*t^8-2*(3912+56*a^2+2374*b+336*b^2+a*(1069+380*b))*t^4*u+3*(2969+208"
     "*a^2+1632*b+208*b^2+40*a*(41+12*b))*u^2)-262144*w^3*t^3*u^2*((59+6*a+20*b)*t^4-2*(33+10*a+10*b)*u)"
     "+65536*w^4*t^4*(t^4-u)*u^2"},
    {0, 5,
     "1048576*u*(8*(105+142*b+60*b^2+8*b^3)*t^12-3*(5+2*b)*(2349+32*a^2+1040*b+112*b^2+4*a*(145+36*b))"
     "*t^8*u+2*(208*a^3+496*a^2*(11+3*b)+a*(40965+20120*b+2416*b^2)+3*(30720+20939*b+4648*b^2+336*b^3))"
     "*t^4*u^2-2*(80847+704*a^3+50892*b+10480*b^2+704*b^3+16*a^2*(655+156*b)+12*a*(4241+1880*b+208*b^2))"
     "*u^3)+2097152*w*t*u^2*(18*(5+2*b)*(9+a+2*b)*t^8-(6939+112*a^2+3290*b+376*b^2+2*a*(961+252*b))*t^4"
     "*u+(6609+304*a^2+2888*b+304*b^2+8*a*(361+84*b))*u^2)-1048576*w^2*t^2*u^2*(3*(5+2*b)*t^8-2*(155+19"
     "*a+39*b)*t^4*u+24*(13+3*a+3*b)*u^2)-2097152*w^3*t^3*(t^4-u)*u^3"},
    {0, 6,
     "-2097152*u^2*(-12*(35+24*b+4*b^2)*t^12+(8313+32*a^2+3920*b+448*b^2+4*a*(313+84*b))*t^8*u-(32223+496"
     "*a^2+12712*b+1232*b^2+8*a*(1051+224*b))*t^4*u^2+4*(6321+208*a^2+2312*b+208*b^2+8*a*(289+56*b))*u^3)"
     "+4194304*w*t*u^3*(2*(55+3*a+14*b)*t^8-(681+84*a+140*b)*t^4*u+28*(21+4*a+4*b)*u^2)-2097152*w^2*t^2"
     "*(t^4-12*u)*(t^4-u)*u^3"},
    {0, 7,
     "-33554432*u^3*(-(7+2*b)*t^12+3*(29+2*a+6*b)*t^8*u-(273+32*a+48*b)*t^4*u^2+4*(49+8*a+8*b)*u^3)+33554432"
     "*w*t*(t^4-4*u)*(t^4-u)*u^4"},
    {0, 8,
     "16777216*(t^4-4*u)^2*(t^4-u)*u^4"},
    {1, 0,
     "-128*w^3*(1+4*a+4*b)*(-59+928*a^5-77*b-3*b^2+8*b^3+8*a*(2+19*b+b^2)-4*a^3*(199+117*b+35*b^2)-2*a^2"
     "*(47-77*b+29*b^2+6*b^3))+128*w^4*t*(-59+928*a^5-77*b-3*b^2+8*b^3+8*a*(2+19*b+b^2)-4*a^3*(199+117"
     "*b+35*b^2)-2*a^2*(47-77*b+29*b^2+6*b^3))"},
    {1, 1,
     "-524288*(1+2*a)*(1+2*b)*(18+16*a^4+81*b+124*b^2+76*b^3+16*b^4+a^3*(76+64*b)+4*a^2*(31+57*b+24*b^2)"
     "+a*(81+248*b+228*b^2+64*b^3))*t+8192*w*t^2*(1+2*a)*(1+2*b)*(3+4*a+4*b)*(603+224*a^2+748*b+224*b^2"
     "+a*(748+448*b))-8192*w^2*t^3*(1+2*a)*(1+2*b)*(683+256*a^2+872*b+272*b^2+24*a*(35+22*b))-1024*w^3"
     "*(-8*(1+2*b)*(79+56*a^2+36*b+32*a*(5+2*b))*t^4+(-83+928*a^5+131*b+61*b^2+8*b^3+8*a*(-20+19*b+b^2)"
     "-4*a^3*(167+117*b+35*b^2)-2*a^2*(-65-141*b+29*b^2+6*b^3))*u)-8192*w^4*t*(2*(1+a)*(1+2*b)*t^4+(1+2"
     "*a-4*a^2-2*b)*u)"},
    {1, 2,
     "-131072*(-2*(3+8*b+4*b^2)*(1827+96*a^3+1440*b+376*b^2+32*b^3+4*a^2*(197+56*b)+a*(2119+1164*b+160"
     "*b^2))*t^5+(27333+256*a^5+67068*b+60140*b^2+24432*b^3+4416*b^4+256*b^5+192*a^4*(23+16*b)+32*a^3*(765"
     "+886*b+248*b^2)+32*a^2*(1891+2945*b+1496*b^2+248*b^3)+4*a*(16977+33276*b+23548*b^2+7088*b^3+768*b^4))"
     "*t*u)+16384*w*t^2*(-8*(3+8*b+4*b^2)*(1026+124*a^2+478*b+56*b^2+5*a*(145+36*b))*t^4+(70173+1792*a^4"
     "+142320*b+95776*b^2+24064*b^3+1792*b^4+32*a^3*(761+504*b)+16*a^2*(6163+6836*b+1792*b^2)+2*a*(75225"
     "+113888*b+54544*b^2+8064*b^3))*u)-16384*w^2*t^3*(-4*(155+50*a+32*b)*(3+8*b+4*b^2)*t^4+(6683+512*a^3"
     "+10392*b+4720*b^2+512*b^3+176*a^2*(29+18*b)+2*a*(6335+6640*b+1616*b^2))*u)+16384*w^3*(-12*(3+8*b"
     "+4*b^2)*t^8+(223+56*a^2+204*b+48*b^2+32*a*(11+6*b))*t^4*u-(19-4*a+16*a^2+12*b)*u^2)-16384*w^4*t*(2"
     "*(1+a)*t^4-u)*u"},
    {1, 3,
     "-524288*(4*(13+3*a+2*b)*(15+46*b+36*b^2+8*b^3)*t^9-2*(3+2*b)*(96*a^3+4*a^2*(337+112*b)+a*(5849+3496"
     "*b+496*b^2)+4*(1938+1610*b+427*b^2+36*b^3))*t^5*u+(63279+512*a^4+83658*b+39216*b^2+7648*b^3+512*b^4"
     "+32*a^3*(239+100*b)+32*a^2*(1227+913*b+168*b^2)+4*a*(20973+21682*b+7304*b^2+800*b^3))*t*u^2)+262144"
     "*w*t^2*(6*(15+46*b+36*b^2+8*b^3)*t^8-2*(3+2*b)*(124*a^2+5*a*(235+72*b)+4*(629+346*b+45*b^2))*t^4"
     "*u+(21351+672*a^3+22378*b+7136*b^2+672*b^3+8*a^2*(901+364*b)+4*a*(5701+4160*b+728*b^2))*u^2)+262144"
     "*w^2*t^3*u*((3+2*b)*(235+50*a+64*b)*t^4-(1025+132*a^2+780*b+128*b^2+8*a*(107+42*b))*u)-131072*w^3"
     "*u*(6*(3+2*b)*t^8-(27+16*a+12*b)*t^4*u+u^2)"},
    {1, 4,
     "-524288*t*u*(8*(53+9*a+10*b)*(15+16*b+4*b^2)*t^8-2*(47997+96*a^3+41048*b+11152*b^2+960*b^3+4*a^2"
     "*(757+280*b)+a*(22919+14524*b+2176*b^2))*t^4*u+(104727+1600*a^3+81684*b+20336*b^2+1600*b^3+16*a^2"
     "*(1271+380*b)+a*(81732+44960*b+6080*b^2))*u^2)+262144*w*t^2*u*(36*(15+16*b+4*b^2)*t^8-2*(9156+124"
     "*a^2+5590*b+800*b^2+25*a*(101+36*b))*t^4*u+(20673+1456*a^2+11384*b+1456*b^2+32*a*(358+105*b))*u^2)"
     "+262144*w^2*t^3*u^2*(5*(95+10*a+32*b)*t^4-2*(267+84*a+80*b)*u)-786432*w^3*t^4*(t^4-u)*u^2"},
    {1, 5,
     "-4194304*t*u^2*(18*(5+2*b)*(9+a+2*b)*t^8-(6939+112*a^2+3290*b+376*b^2+2*a*(961+252*b))*t^4*u+(6609"
     "+304*a^2+2888*b+304*b^2+8*a*(361+84*b))*u^2)+6291456*w*t^2*u^2*(3*(5+2*b)*t^8-2*(122+15*a+31*b)*t^4"
     "*u+2*(121+28*a+28*b)*u^2)+16777216*w^2*t^3*(t^4-u)*u^3"},
    {1, 6,
     "-8388608*t*u^3*(2*(55+3*a+14*b)*t^8-(681+84*a+140*b)*t^4*u+28*(21+4*a+4*b)*u^2)+4194304*w*t^2*(3"
     "*t^4-28*u)*(t^4-u)*u^3"},
    {1, 7,
     "-67108864*t*u^4*(t^8-5*t^4*u+4*u^2)"},
    {2, 0,
     "1024*w^2*(1+2*a)*(1+2*a+2*b)*(1+4*a+4*b)*(-1+8*a+4*b)-128*w^3*t*(-75+928*a^5-45*b+125*b^2+8*b^3+8"
     "*a*(10+75*b+33*b^2)-4*a^3*(71+117*b+35*b^2)+a^2*(354+922*b-58*b^2-12*b^3))+512*w^4*t^2*(1+2*a)*("
     "-1+8*a+4*b)"},
    {2, 1,
     "-8192*(1+2*a)*(1+2*b)*(1809+896*a^3+4656*b+3664*b^2+896*b^3+16*a^2*(229+168*b)+16*a*(291+458*b+168"
     "*b^2))*t^2+24576*w*t^3*(1+2*a)*(1+2*b)*(501+208*a^2+656*b+208*b^2+16*a*(41+26*b))+4096*w^2*(-((1"
     "+2*b)*(767+560*a^2+392*b+16*b^2+4*a*(367+148*b))*t^4)+2*(152+80*a^3+337*b+144*b^2+16*b^3+12*a^2*(17"
     "+12*b)+a*(213+304*b+80*b^2))*u)+8192*w^3*t*(2*(1+2*b)*(15+12*a+2*b)*t^4-(27+28*a^2+52*b+8*b^2+8*a"
     "*(4+3*b))*u)-4096*w^4*t^2*((1+2*b)*t^4-2*(1+a+b)*u)"},
    {2, 2,
     "-16384*(-8*(3+8*b+4*b^2)*(1026+124*a^2+478*b+56*b^2+5*a*(145+36*b))*t^6+(70173+1792*a^4+142320*b"
     "+95776*b^2+24064*b^3+1792*b^4+32*a^3*(761+504*b)+16*a^2*(6163+6836*b+1792*b^2)+2*a*(75225+113888"
     "*b+54544*b^2+8064*b^3))*t^2*u)+49152*w*t^3*(-4*(117+38*a+24*b)*(3+8*b+4*b^2)*t^4+(5037+416*a^3+7856"
     "*b+3568*b^2+384*b^3+16*a^2*(251+156*b)+2*a*(4813+5056*b+1232*b^2))*u)-8192*w^2*(-100*(3+8*b+4*b^2)"
     "*t^8+(2339+560*a^2+2136*b+480*b^2+4*a*(811+444*b))*t^4*u-(761+144*a^2+544*b+80*b^2+96*a*(5+2*b))"
     "*u^2)+98304*w^3*t*u*((7+4*a+2*b)*t^4-2*(3+a+b)*u)-8192*w^4*t^2*(t^4-u)*u"},
    {2, 3,
     "-262144*t^2*(6*(15+46*b+36*b^2+8*b^3)*t^8-2*(3+2*b)*(124*a^2+5*a*(235+72*b)+4*(629+346*b+45*b^2))"
     "*t^4*u+(21351+672*a^3+22378*b+7136*b^2+672*b^3+8*a^2*(901+364*b)+4*a*(5701+4160*b+728*b^2))*u^2)"
     "+786432*w*t^3*u*(-(3+2*b)*(177+38*a+48*b)*t^4+2*(387+52*a^2+294*b+48*b^2+2*a*(163+64*b))*u)+131072"
     "*w^2*u*(25*(3+2*b)*t^8-2*(69+37*a+29*b)*t^4*u+2*(15+4*a+4*b)*u^2)+131072*w^3*t*(t^4-u)*u^2"},
    {2, 4,
     "-262144*t^2*u*(36*(15+16*b+4*b^2)*t^8-2*(9156+124*a^2+5590*b+800*b^2+25*a*(101+36*b))*t^4*u+(20673"
     "+1456*a^2+11384*b+1456*b^2+32*a*(358+105*b))*u^2)-786432*w*t^3*u^2*((357+38*a+120*b)*t^4-2*(201+64"
     "*a+60*b)*u)+131072*w^2*(25*t^4-4*u)*(t^4-u)*u^2"},
    {2, 5,
     "-6291456*t^2*u^2*(3*(5+2*b)*t^8-2*(122+15*a+31*b)*t^4*u+2*(121+28*a+28*b)*u^2)-37748736*w*t^3*(t^4"
     "-u)*u^3"},
    {2, 6,
     "-4194304*t^2*u^3*(3*t^8-31*t^4*u+28*u^2)"},
    {3, 0,
     "-2048*w*(1+2*a)*(1+2*a+2*b)*(1+4*a+4*b)*(3+4*a+4*b)+8192*w^2*t*(1+2*a)*(1+2*a+2*b)*(2+5*a+4*b)-4096"
     "*w^3*t^2*(1+2*a)*(2+5*a+4*b)+1024*w^4*t^3*(1+2*a)"},
    {3, 1,
     "-16384*(1+2*a)*(1+2*b)*(501+208*a^2+656*b+208*b^2+16*a*(41+26*b))*t^3-8192*w*(-((1+2*b)*(609+448"
     "*a^2+320*b+16*b^2+4*a*(287+116*b))*t^4)+2*(159+48*a^3+319*b+136*b^2+16*b^3+16*a^2*(11+7*b)+a*(247"
     "+312*b+80*b^2))*u)+16384*w^2*t*(-2*(1+2*b)*(25+19*a+4*b)*t^4+(59+36*a^2+94*b+16*b^2+a*(74+48*b))"
     "*u)+32768*w^3*t^2*((1+2*b)*t^4-2*(1+a+b)*u)"},
    {3, 2,
     "-32768*(-4*(117+38*a+24*b)*(3+8*b+4*b^2)*t^7+(5037+416*a^3+7856*b+3568*b^2+384*b^3+16*a^2*(251+156"
     "*b)+2*a*(4813+5056*b+1232*b^2))*t^3*u)+16384*w*(-76*(3+8*b+4*b^2)*t^8+(448*a^2+4*a*(635+348*b)+3"
     "*(631+576*b+128*b^2))*t^4*u-(723+112*a^2+520*b+80*b^2+8*a*(61+24*b))*u^2)-32768*w^2*t*u*((74+38*a"
     "+24*b)*t^4-(67+24*a+24*b)*u)+65536*w^3*t^2*(t^4-u)*u"},
    {3, 3,
     "524288*t^3*u*((3+2*b)*(177+38*a+48*b)*t^4-2*(387+52*a^2+294*b+48*b^2+2*a*(163+64*b))*u)-262144*w"
     "*u*(19*(3+2*b)*t^8-(111+58*a+46*b)*t^4*u+(29+8*a+8*b)*u^2)-524288*w^2*t*(t^4-u)*u^2"},
    {3, 4,
     "524288*t^3*u^2*((357+38*a+120*b)*t^4-2*(201+64*a+60*b)*u)-262144*w*(19*t^4-4*u)*(t^4-u)*u^2"},
    {3, 5,
     "25165824*t^3*(t^4-u)*u^3"},
    {4, 0,
     "1024*(1+2*a)*(3+32*a^3+22*b+48*b^2+32*b^3+48*a^2*(1+2*b)+a*(22+96*b+96*b^2))-10240*w*t*(1+2*a)*(1"
     "+2*a+2*b)*(3+4*a+4*b)+512*w^2*t^2*(1+2*a)*(53+80*a+76*b)-5120*w^3*t^3*(1+2*a)+256*w^4*(t^4-u)"},
    {4, 1,
     "4096*(-((1+2*b)*(609+448*a^2+320*b+16*b^2+4*a*(287+116*b))*t^4)+2*(159+48*a^3+319*b+136*b^2+16*b^3"
     "+16*a^2*(11+7*b)+a*(247+312*b+80*b^2))*u)+81920*w*t*((1+2*b)*(9*a+2*(6+b))*t^4-(15+8*a^2+23*b+4*b^2"
     "+a*(19+12*b))*u)-77824*w^2*t^2*((1+2*b)*t^4-2*(1+a+b)*u)"},
    {4, 2,
     "-8192*(-76*(3+8*b+4*b^2)*t^8+(448*a^2+4*a*(635+348*b)+3*(631+576*b+128*b^2))*t^4*u-(723+112*a^2+520"
     "*b+80*b^2+8*a*(61+24*b))*u^2)+245760*w*t*u*(2*(6+3*a+2*b)*t^4-(11+4*a+4*b)*u)-155648*w^2*t^2*(t^4"
     "-u)*u"},
    {4, 3,
     "131072*u*(19*(3+2*b)*t^8-(111+58*a+46*b)*t^4*u+(29+8*a+8*b)*u^2)+655360*w*t*(t^4-u)*u^2"},
    {4, 4,
     "131072*u^2*(19*t^8-23*t^4*u+4*u^2)"},
    {5, 0,
     "4096*(1+2*a)*(3+8*a^2+10*b+8*b^2+2*a*(5+8*b))*t-9216*(1+2*a)*(3+4*a+4*b)*w*t^2+9216*(1+2*a)*w^2*t^3"
     "-1024*w^3*(t^4-u)"},
    {5, 1,
     "32768*(-((1+2*b)*(9*a+2*(6+b))*t^5)+(15+8*a^2+23*b+4*b^2+a*(19+12*b))*t*u)+73728*w*t^2*((1+2*b)*t^4"
     "-2*(1+a+b)*u)"},
    {5, 2,
     "-98304*t*u*(2*(6+3*a+2*b)*t^4-(11+4*a+4*b)*u)+147456*w*t^2*(t^4-u)*u"},
    {5, 3,
     "-262144*t*(t^4-u)*u^2"},
    {6, 0,
     "3072*(1+2*a)*(3+4*a+4*b)*t^2-7168*w*t^3*(1+2*a)+1536*w^2*(t^4-u)"},
    {6, 1,
     "24576*(-(1+2*b)*t^6+2*(1+a+b)*t^2*u)"},
    {6, 2,
     "-49152*t^2*(t^4-u)*u"},
    {7, 0,
     "2048*(1+2*a)*t^3-1024*w*(t^4-u)"},
    {8, 0,
     "256*(t^4-u)"},
};
const std::size_t kI2TableK4Size = sizeof(kI2TableK4) / sizeof(kI2TableK4[0]);

// Reference coefficients of the integral commutator [I1, I2] at k=4.
const CoeffEntry kI12TableK4[] = {
    {0, 1,
     "262144*(1+2*a)*(1+2*b)*(1+2*a+2*b)*(3+2*a+2*b)*(1+4*a+4*b)*(3+4*a+4*b)*(5+4*a+4*b)*(7+4*a+4*b)-1048576"
     "*w*t*(1+2*a)*(1+2*b)*(1+2*a+2*b)*(3+2*a+2*b)*(3+4*a+4*b)*(5+4*a+4*b)*(7+4*a+4*b)+786432*w^2*t^2*(1"
     "+2*a)*(1+2*b)*(3+2*a+2*b)*(3+4*a+4*b)*(5+4*a+4*b)*(7+4*a+4*b)-524288*w^3*t^3*(1+2*a)*(1+2*b)*(3+2"
     "*a+2*b)*(5+4*a+4*b)*(7+4*a+4*b)+65536*w^4*(1+2*b)*(2*(27+16*a^3+28*b+8*b^2+32*a^2*(2+b)+a*(79+72"
     "*b+16*b^2))*t^4-3*u)"},
    {0, 2,
     "524288*(-(1+2*b)*(3+2*b)*(105+16*a^2+80*b+16*b^2+16*a*(5+2*b))*(2289+192*a^3+1762*b+432*b^2+32*b^3"
     "+16*a^2*(85+26*b)+4*a*(781+448*b+64*b^2))*t^4+(1519875+2048*a^7+4915494*b+6477700*b^2+4539464*b^3"
     "+1833088*b^4+423680*b^5+50176*b^6+2048*b^7+1024*a^6*(49+36*b)+256*a^5*(1655+2008*b+608*b^2)+128*a^4"
     "*(14321+23124*b+12536*b^2+2320*b^3)+8*a^3*(567433+1129728*b+845152*b^2+285184*b^3+37120*b^4)+4*a^2"
     "*(1619425+3836892*b+3602368*b^2+1690304*b^3+401152*b^4+38912*b^5)+4*a*(1229031+3407690*b+3836892"
     "*b^2+2259456*b^3+739968*b^4+128512*b^5+9216*b^6))*u)+2097152*w*t*((3+8*b+4*b^2)*(25515+640*a^4+27858"
     "*b+11368*b^2+2016*b^3+128*b^4+128*a^3*(51+16*b)+8*a^2*(3103+1884*b+288*b^2)+4*a*(10377+9048*b+2640"
     "*b^2+256*b^3))*t^4-(168525+512*a^6+469674*b+507700*b^2+274264*b^3+78240*b^4+10880*b^5+512*b^6+640"
     "*a^5*(17+12*b)+96*a^4*(815+952*b+272*b^2)+8*a^3*(34283+53388*b+27472*b^2+4736*b^3)+4*a^2*(126925"
     "+244672*b+174432*b^2+54944*b^3+6528*b^4)+16*a*(29394+68135*b+61168*b^2+26694*b^3+5712*b^4+480*b^5))"
     "*u)+1572864*w^2*t^2*(-((3+8*b+4*b^2)*(4725+256*a^3+3380*b+816*b^2+64*b^3+48*a^2*(43+12*b)+8*a*(685"
     "+360*b+48*b^2))*t^4)+2*(16695+128*a^5+39699*b+34082*b^2+13144*b^3+2272*b^4+128*b^5+32*a^4*(71+48"
     "*b)+8*a^3*(1643+1844*b+496*b^2)+a^2*(34082+51232*b+24960*b^2+3968*b^3)+2*a*(20007+37757*b+25616*b^2"
     "+7376*b^3+768*b^4))*u)+1048576*w^3*t^3*((3+8*b+4*b^2)*(375+48*a^2+152*b+16*b^2+16*a*(17+4*b))*t^4"
     "-2*(1470+32*a^4+2921*b+1894*b^2+448*b^3+32*b^4+32*a^3*(14+9*b)+2*a^2*(947+1016*b+256*b^2)+a*(3026"
     "+4418*b+2032*b^2+288*b^3))*u)+131072*w^4*(-8*(6+2*a+b)*(3+8*b+4*b^2)*t^8+2*(225+16*a^3+352*b+160"
     "*b^2+16*b^3+32*a^2*(5+3*b)+a*(403+408*b+96*b^2))*t^4*u-3*u^2)"},
    {0, 3,
     "2097152*(4*(1+2*b)*(3+2*b)*(5+2*b)*(11025+160*a^3+5852*b+1056*b^2+64*b^3+48*a^2*(41+8*b)+a*(8078"
     "+3024*b+288*b^2))*t^8-2*(3+2*b)*(1672335+1536*a^5+2325370*b+1253248*b^2+327456*b^3+41600*b^4+2048"
     "*b^5+1280*a^4*(27+10*b)+512*a^3*(571+379*b+61*b^2)+64*a^2*(18453+16957*b+5094*b^2+504*b^3)+2*a*(1140845"
     "+1318256*b+560176*b^2+104064*b^3+7168*b^4))*t^4*u+(6144*a^6+512*a^5*(279+122*b)+256*a^4*(5067+3894"
     "*b+760*b^2)+64*a^3*(95187+100130*b+35568*b^2+4320*b^3)+8*a^2*(1968837+2583720*b+1277792*b^2+284544"
     "*b^3+24320*b^4)+a*(21265422+33263124*b+20669760*b^2+6408320*b^3+996864*b^4+62464*b^5)+3*(3895395"
     "+7088474*b+5250232*b^2+2030656*b^3+432384*b^4+47616*b^5+2048*b^6))*u^2)+8388608*w*t*(-3*(1+2*b)*(3"
     "+2*b)*(5+2*b)*(595+32*a^2+192*b+16*b^2+12*a*(23+4*b))*t^8+(3+2*b)*(183015+640*a^4+202408*b+80708"
     "*b^2+13664*b^3+832*b^4+128*a^3*(91+32*b)+8*a^2*(9283+5856*b+888*b^2)+4*a*(49447+43216*b+12216*b^2"
     "+1120*b^3))*t^4*u-(667485+1280*a^5+1038522*b+622424*b^2+179632*b^3+24832*b^4+1280*b^5+256*a^4*(97"
     "+41*b)+16*a^3*(11227+8380*b+1568*b^2)+8*a^2*(77803+79882*b+27312*b^2+3136*b^3)+2*a*(519261+669842"
     "*b+319528*b^2+67040*b^3+5248*b^4))*u^2)+6291456*w^2*t^2*(2*(1+2*b)*(3+2*b)*(5+2*b)*(55+12*a+8*b)"
     "*t^8-(3+2*b)*(18425+256*a^3+15040*b+3928*b^2+320*b^3+48*a^2*(73+24*b)+8*a*(1835+1080*b+152*b^2))"
     "*t^4*u+2*(35175+256*a^4+45433*b+20696*b^2+3920*b^3+256*b^4+80*a^3*(49+20*b)+8*a^2*(2587+1878*b+336"
     "*b^2)+a*(45433+45844*b+15024*b^2+1600*b^3))*u^2)+4194304*w^3*t^3*(-2*(1+2*b)*(3+2*b)*(5+2*b)*t^8"
     "+(3+2*b)*(845+48*a^2+440*b+56*b^2+16*a*(27+8*b))*t^4*u-2*(48*a^3+16*a^2*(33+13*b)+a*(1719+1224*b"
     "+208*b^2)+3*(560+573*b+176*b^2+16*b^3))*u^2)+2097152*w^4*t^4*u*(-(3+2*b)*(17+4*a+4*b)*t^4+(69+8*a^2"
     "+52*b+8*b^2+4*a*(13+5*b))*u)"},
    {0, 4,
     "2097152*(-16*(1+2*b)*(3+2*b)*(5+2*b)*(7+2*b)*(49+8*a+6*b)*t^12+24*(3+2*b)*(5+2*b)*(30429+160*a^3"
     "+17696*b+3360*b^2+208*b^3+16*a^2*(179+40*b)+2*a*(8253+3416*b+344*b^2))*t^8*u-(54993645+3072*a^5+71756970"
     "*b+36346592*b^2+8936128*b^3+1067776*b^4+49664*b^5+1280*a^4*(129+50*b)+256*a^3*(9909+6616*b+1064*b^2)"
     "+32*a^2*(522537+470458*b+136992*b^2+12960*b^3)+4*a*(12479505+13828160*b+5591232*b^2+980736*b^3+63232"
     "*b^4))*t^4*u^2+2*(24260880+15616*a^5+28761813*b+13443712*b^2+3100448*b^3+352256*b^4+15616*b^5+256"
     "*a^4*(1376+425*b)+32*a^3*(96889+54400*b+7760*b^2)+32*a^2*(420116+329151*b+86784*b^2+7760*b^3)+a*(28761813"
     "+28429568*b+10532832*b^2+1740800*b^3+108800*b^4))*u^3)+8388608*w*t*(8*(1+2*b)*(3+2*b)*(5+2*b)*(7"
     "+2*b)*t^12-2*(3+2*b)*(5+2*b)*(10087+288*a^2+3808*b+352*b^2+36*a*(97+20*b))*t^8*u+(1854405+640*a^4"
     "+2016874*b+790832*b^2+132128*b^3+7936*b^4+128*a^3*(211+80*b)+8*a^2*(38323+24972*b+3888*b^2)+4*a*(327517"
     "+287944*b+81216*b^2+7360*b^3))*t^4*u^2-2*(863625+2624*a^4+846129*b+302780*b^2+46832*b^3+2624*b^4"
     "+16*a^3*(2927+880*b)+4*a^2*(75695+41572*b+5728*b^2)+a*(846129+652072*b+166288*b^2+14080*b^3))*u^3)"
     "+6291456*w^2*t^2*u*(4*(3+2*b)*(5+2*b)*(221+36*a+40*b)*t^8-(112305+256*a^3+96292*b+26208*b^2+2240"
     "*b^3+48*a^2*(163+60*b)+8*a*(7105+4488*b+672*b^2))*t^4*u+(111195+1600*a^3+85108*b+20752*b^2+1600*b^3"
     "+16*a^2*(1297+380*b)+a*(85108+45920*b+6080*b^2))*u^2)+4194304*w^3*t^3*u*(-12*(3+2*b)*(5+2*b)*t^8"
     "+(2955+48*a^2+1784*b+256*b^2+16*a*(57+20*b))*t^4*u-(3115+208*a^2+1672*b+208*b^2+8*a*(209+60*b))*u^2)"
     "+2097152*w^4*t^4*u^2*(-2*(16+2*a+5*b)*t^4+5*(7+2*a+2*b)*u)"},
    {0, 5,
     "8388608*u*(-16*(3+2*b)*(5+2*b)*(7+2*b)*(125+16*a+18*b)*t^12+12*(5+2*b)*(102249+160*a^3+62940*b+12496"
     "*b^2+800*b^3+48*a^2*(97+24*b)+2*a*(19831+8824*b+944*b^2))*t^8*u-(20050065+6400*a^4+17350416*b+5512000"
     "*b^2+761728*b^3+38656*b^4+768*a^3*(297+82*b)+32*a^2*(82219+40908*b+4992*b^2)+16*a*(768531+529998"
     "*b+119680*b^2+8864*b^3))*t^4*u^2+(14781585+21760*a^4+11761152*b+3473504*b^2+451584*b^3+21760*b^4"
     "+21504*a^3*(21+5*b)+32*a^2*(108547+47968*b+5360*b^2)+64*a*(183768+114853*b+23984*b^2+1680*b^3))*u^3)"
     "+33554432*w*t*u*(16*(3+2*b)*(5+2*b)*(7+2*b)*t^12-(5+2*b)*(22827+288*a^2+9632*b+976*b^2+324*a*(17"
     "+4*b))*t^8*u+2*(219555+512*a^3+149017*b+32728*b^2+2320*b^3+48*a^2*(278+75*b)+a*(99124+48296*b+5728"
     "*b^2))*t^4*u^2-(343245+2816*a^3+212232*b+42832*b^2+2816*b^3+16*a^2*(2677+624*b)+24*a*(8843+3844*b"
     "+416*b^2))*u^3)+50331648*w^2*t^2*u^2*(9*(5+2*b)*(37+4*a+8*b)*t^8-2*(4080+72*a^2+1951*b+224*b^2+12"
     "*a*(99+26*b))*t^4*u+(6825+304*a^2+2936*b+304*b^2+8*a*(367+84*b))*u^2)+33554432*w^3*t^3*u^2*(-3*(5"
     "+2*b)*t^8+(117+16*a+30*b)*t^4*u-2*(53+12*a+12*b)*u^2)-8388608*w^4*t^4*(t^4-u)*u^3"},
    {0, 6,
     "67108864*u^2*(-12*(85+8*a+14*b)*(35+24*b+4*b^2)*t^12+(535437+160*a^3+342780*b+70752*b^2+4704*b^3"
     "+48*a^2*(209+56*b)+2*a*(70315+33048*b+3744*b^2))*t^8*u-4*(340074+656*a^3+191145*b+35228*b^2+2128"
     "*b^3+12*a^2*(1429+308*b)+a*(136777+54504*b+5360*b^2))*t^4*u^2+8*(109956+560*a^3+57199*b+9840*b^2"
     "+560*b^3+16*a^2*(615+119*b)+a*(57199+20832*b+1904*b^2))*u^3)+67108864*w*t*u^2*(24*(5+2*b)*(7+2*b)"
     "*t^12-3*(8603+32*a^2+3936*b+432*b^2+12*a*(107+28*b))*t^8*u+(76167+1200*a^2+29896*b+2864*b^2+8*a*(2517"
     "+532*b))*t^4*u^2-4*(13083+416*a^2+4708*b+416*b^2+a*(4708+896*b))*u^3)+100663296*w^2*t^2*u^3*((223"
     "+12*a+56*b)*t^8-(809+104*a+168*b)*t^4*u+4*(149+28*a+28*b)*u^2)-67108864*w^3*t^3*u^3*(t^8-5*t^4*u"
     "+4*u^2)"},
    {0, 7,
     "536870912*u^3*(-4*(7+2*b)*(65+4*a+12*b)*t^12+3*(6111+32*a^2+2284*b+208*b^2+8*a*(122+25*b))*t^8*u"
     "-(39123+528*a^2+13040*b+1072*b^2+8*a*(1173+208*b))*t^4*u^2+2*(11417+272*a^2+3536*b+272*b^2+16*a*(221"
     "+36*b))*u^3)+1073741824*w*t*u^3*(2*(7+2*b)*t^12-2*(9*a+26*(5+b))*t^8*u+(641+76*a+112*b)*t^4*u^2-2"
     "*(199+32*a+32*b)*u^3)+1610612736*w^2*t^2*u^4*(t^8-3*t^4*u+2*u^2)"},
    {0, 8,
     "-536870912*u^4*((265+8*a+54*b)*t^12-6*(340+25*a+57*b)*t^8*u+8*(477+52*a+72*b)*t^4*u^2-32*(64+9*a"
     "+9*b)*u^3)+1073741824*w*t*u^4*(t^12-13*t^8*u+28*t^4*u^2-16*u^3)"},
    {0, 9,
     "-2147483648*(t^4-4*u)*(3*t^4-4*u)*(t^4-u)*u^5"},
    {1, 1,
     "2097152*(1+2*a)*(1+2*b)*(1+2*a+2*b)*(3+2*a+2*b)*(3+4*a+4*b)*(5+4*a+4*b)*(7+4*a+4*b)*t-3670016*w*t^2"
     "*(1+2*a)*(1+2*b)*(3+2*a+2*b)*(3+4*a+4*b)*(5+4*a+4*b)*(7+4*a+4*b)+4718592*w^2*t^3*(1+2*a)*(1+2*b)"
     "*(3+2*a+2*b)*(5+4*a+4*b)*(7+4*a+4*b)+1310720*w^3*(1+2*b)*(-2*(27+16*a^3+28*b+8*b^2+32*a^2*(2+b)+a"
     "*(79+72*b+16*b^2))*t^4+3*u)+262144*w^4*t*(1+2*b)*(2*(6+11*a+4*a^2+2*b+4*a*b)*t^4-3*u)"},
    {1, 2,
     "4194304*t*(-((3+8*b+4*b^2)*(25515+640*a^4+27858*b+11368*b^2+2016*b^3+128*b^4+128*a^3*(51+16*b)+8"
     "*a^2*(3103+1884*b+288*b^2)+4*a*(10377+9048*b+2640*b^2+256*b^3))*t^4)+(168525+512*a^6+469674*b+507700"
     "*b^2+274264*b^3+78240*b^4+10880*b^5+512*b^6+640*a^5*(17+12*b)+96*a^4*(815+952*b+272*b^2)+8*a^3*(34283"
     "+53388*b+27472*b^2+4736*b^3)+4*a^2*(126925+244672*b+174432*b^2+54944*b^3+6528*b^4)+16*a*(29394+68135"
     "*b+61168*b^2+26694*b^3+5712*b^4+480*b^5))*u)+7340032*w*t^2*((3+8*b+4*b^2)*(4725+256*a^3+3380*b+816"
     "*b^2+64*b^3+48*a^2*(43+12*b)+8*a*(685+360*b+48*b^2))*t^4-2*(16695+128*a^5+39699*b+34082*b^2+13144"
     "*b^3+2272*b^4+128*b^5+32*a^4*(71+48*b)+8*a^3*(1643+1844*b+496*b^2)+a^2*(34082+51232*b+24960*b^2+3968"
     "*b^3)+2*a*(20007+37757*b+25616*b^2+7376*b^3+768*b^4))*u)+9437184*w^2*t^3*(-((3+8*b+4*b^2)*(375+48"
     "*a^2+152*b+16*b^2+16*a*(17+4*b))*t^4)+2*(1470+32*a^4+2921*b+1894*b^2+448*b^3+32*b^4+32*a^3*(14+9"
     "*b)+2*a^2*(947+1016*b+256*b^2)+a*(3026+4418*b+2032*b^2+288*b^3))*u)+2621440*w^3*(8*(6+2*a+b)*(3+8"
     "*b+4*b^2)*t^8-2*(225+16*a^3+352*b+160*b^2+16*b^3+32*a^2*(5+3*b)+a*(403+408*b+96*b^2))*t^4*u+3*u^2)"
     "+524288*w^4*t*(-2*(3+8*b+4*b^2)*t^8+2*(15+4*a^2+14*b+4*b^2+a*(23+12*b))*t^4*u-3*u^2)"},
    {1, 3,
     "16777216*t*(3*(1+2*b)*(3+2*b)*(5+2*b)*(595+32*a^2+192*b+16*b^2+12*a*(23+4*b))*t^8-(3+2*b)*(183015"
     "+640*a^4+202408*b+80708*b^2+13664*b^3+832*b^4+128*a^3*(91+32*b)+8*a^2*(9283+5856*b+888*b^2)+4*a*(49447"
     "+43216*b+12216*b^2+1120*b^3))*t^4*u+(667485+1280*a^5+1038522*b+622424*b^2+179632*b^3+24832*b^4+1280"
     "*b^5+256*a^4*(97+41*b)+16*a^3*(11227+8380*b+1568*b^2)+8*a^2*(77803+79882*b+27312*b^2+3136*b^3)+2"
     "*a*(519261+669842*b+319528*b^2+67040*b^3+5248*b^4))*u^2)+29360128*w*t^2*(-2*(1+2*b)*(3+2*b)*(5+2"
     "*b)*(55+12*a+8*b)*t^8+(3+2*b)*(18425+256*a^3+15040*b+3928*b^2+320*b^3+48*a^2*(73+24*b)+8*a*(1835"
     "+1080*b+152*b^2))*t^4*u-2*(35175+256*a^4+45433*b+20696*b^2+3920*b^3+256*b^4+80*a^3*(49+20*b)+8*a^2"
     "*(2587+1878*b+336*b^2)+a*(45433+45844*b+15024*b^2+1600*b^3))*u^2)+37748736*w^2*t^3*(2*(1+2*b)*(3"
     "+2*b)*(5+2*b)*t^8-(3+2*b)*(845+48*a^2+440*b+56*b^2+16*a*(27+8*b))*t^4*u+2*(48*a^3+16*a^2*(33+13*b)"
     "+a*(1719+1224*b+208*b^2)+3*(560+573*b+176*b^2+16*b^3))*u^2)+41943040*w^3*t^4*u*((3+2*b)*(17+4*a+4"
     "*b)*t^4-(69+8*a^2+52*b+8*b^2+4*a*(13+5*b))*u)+4194304*w^4*t^5*u*(-((3+2*b)*t^4)+2*(2+a+b)*u)"},
    {1, 4,
     "16777216*t*(-8*(1+2*b)*(3+2*b)*(5+2*b)*(7+2*b)*t^12+2*(3+2*b)*(5+2*b)*(10087+288*a^2+3808*b+352*b^2"
     "+36*a*(97+20*b))*t^8*u-(1854405+640*a^4+2016874*b+790832*b^2+132128*b^3+7936*b^4+128*a^3*(211+80"
     "*b)+8*a^2*(38323+24972*b+3888*b^2)+4*a*(327517+287944*b+81216*b^2+7360*b^3))*t^4*u^2+2*(863625+2624"
     "*a^4+846129*b+302780*b^2+46832*b^3+2624*b^4+16*a^3*(2927+880*b)+4*a^2*(75695+41572*b+5728*b^2)+a"
     "*(846129+652072*b+166288*b^2+14080*b^3))*u^3)+29360128*w*t^2*u*(-4*(3+2*b)*(5+2*b)*(221+36*a+40*b)"
     "*t^8+(112305+256*a^3+96292*b+26208*b^2+2240*b^3+48*a^2*(163+60*b)+8*a*(7105+4488*b+672*b^2))*t^4"
     "*u-(111195+1600*a^3+85108*b+20752*b^2+1600*b^3+16*a^2*(1297+380*b)+a*(85108+45920*b+6080*b^2))*u^2)"
     "+37748736*w^2*t^3*u*(12*(3+2*b)*(5+2*b)*t^8-(2955+48*a^2+1784*b+256*b^2+16*a*(57+20*b))*t^4*u+(3115"
     "+208*a^2+1672*b+208*b^2+8*a*(209+60*b))*u^2)+41943040*w^3*t^4*u^2*(2*(16+2*a+5*b)*t^4-5*(7+2*a+2"
     "*b)*u)-4194304*w^4*t^5*(t^4-u)*u^2"},
    {1, 5,
     "-67108864*t*u*(16*(105+142*b+60*b^2+8*b^3)*t^12-(5+2*b)*(22827+288*a^2+9632*b+976*b^2+324*a*(17+4"
     "*b))*t^8*u+2*(219555+512*a^3+149017*b+32728*b^2+2320*b^3+48*a^2*(278+75*b)+a*(99124+48296*b+5728"
     "*b^2))*t^4*u^2-(343245+2816*a^3+212232*b+42832*b^2+2816*b^3+16*a^2*(2677+624*b)+24*a*(8843+3844*b"
     "+416*b^2))*u^3)+234881024*w*t^2*u^2*(-9*(5+2*b)*(37+4*a+8*b)*t^8+2*(4080+72*a^2+1951*b+224*b^2+12"
     "*a*(99+26*b))*t^4*u-(6825+304*a^2+2936*b+304*b^2+8*a*(367+84*b))*u^2)+301989888*w^2*t^3*u^2*(3*(5"
     "+2*b)*t^8-(117+16*a+30*b)*t^4*u+2*(53+12*a+12*b)*u^2)+167772160*w^3*t^4*(t^4-u)*u^3"},
    {1, 6,
     "134217728*t*u^2*(-24*(35+24*b+4*b^2)*t^12+3*(8603+32*a^2+3936*b+432*b^2+12*a*(107+28*b))*t^8*u-(76167"
     "+1200*a^2+29896*b+2864*b^2+8*a*(2517+532*b))*t^4*u^2+4*(13083+416*a^2+4708*b+416*b^2+a*(4708+896"
     "*b))*u^3)+469762048*w*t^2*u^3*(-(223+12*a+56*b)*t^8+(809+104*a+168*b)*t^4*u-4*(149+28*a+28*b)*u^2)"
     "+603979776*w^2*t^3*u^3*(t^8-5*t^4*u+4*u^2)"},
    {1, 7,
     "2147483648*t*u^3*(-2*(7+2*b)*t^12+2*(9*a+26*(5+b))*t^8*u-(641+76*a+112*b)*t^4*u^2+2*(199+32*a+32"
     "*b)*u^3)-7516192768*w*t^2*u^4*(t^8-3*t^4*u+2*u^2)"},
    {1, 8,
     "-2147483648*t*(t^4-u)*u^4*(t^8-12*t^4*u+16*u^2)"},
    {2, 1,
     "3670016*t^2*(1+2*a)*(1+2*b)*(3+2*a+2*b)*(3+4*a+4*b)*(5+4*a+4*b)*(7+4*a+4*b)-11010048*w*t^3*(1+2*a)"
     "*(1+2*b)*(3+2*a+2*b)*(5+4*a+4*b)*(7+4*a+4*b)+5898240*w^2*(1+2*b)*(2*(27+16*a^3+28*b+8*b^2+32*a^2"
     "*(2+b)+a*(79+72*b+16*b^2))*t^4-3*u)+2621440*w^3*t*(1+2*b)*(-2*(6+11*a+4*a^2+2*b+4*a*b)*t^4+3*u)+196608"
     "*w^4*t^2*(1+2*b)*((5+4*a)*t^4-3*u)"},
    {2, 2,
     "7340032*t^2*(-((3+8*b+4*b^2)*(4725+256*a^3+3380*b+816*b^2+64*b^3+48*a^2*(43+12*b)+8*a*(685+360*b"
     "+48*b^2))*t^4)+2*(16695+128*a^5+39699*b+34082*b^2+13144*b^3+2272*b^4+128*b^5+32*a^4*(71+48*b)+8*a^3"
     "*(1643+1844*b+496*b^2)+a^2*(34082+51232*b+24960*b^2+3968*b^3)+2*a*(20007+37757*b+25616*b^2+7376*b^3"
     "+768*b^4))*u)+22020096*w*t^3*((3+8*b+4*b^2)*(375+48*a^2+152*b+16*b^2+16*a*(17+4*b))*t^4-2*(1470+32"
     "*a^4+2921*b+1894*b^2+448*b^3+32*b^4+32*a^3*(14+9*b)+2*a^2*(947+1016*b+256*b^2)+a*(3026+4418*b+2032"
     "*b^2+288*b^3))*u)+11796480*w^2*(-8*(6+2*a+b)*(3+8*b+4*b^2)*t^8+2*(225+16*a^3+352*b+160*b^2+16*b^3"
     "+32*a^2*(5+3*b)+a*(403+408*b+96*b^2))*t^4*u-3*u^2)+5242880*w^3*t*(2*(3+8*b+4*b^2)*t^8-2*(15+4*a^2"
     "+14*b+4*b^2+a*(23+12*b))*t^4*u+3*u^2)+393216*w^4*t^2*((5+4*a)*t^4-3*u)*u"},
    {2, 3,
     "29360128*t^2*(2*(1+2*b)*(3+2*b)*(5+2*b)*(55+12*a+8*b)*t^8-(3+2*b)*(18425+256*a^3+15040*b+3928*b^2"
     "+320*b^3+48*a^2*(73+24*b)+8*a*(1835+1080*b+152*b^2))*t^4*u+2*(35175+256*a^4+45433*b+20696*b^2+3920"
     "*b^3+256*b^4+80*a^3*(49+20*b)+8*a^2*(2587+1878*b+336*b^2)+a*(45433+45844*b+15024*b^2+1600*b^3))*u^2)"
     "+88080384*w*t^3*(-2*(1+2*b)*(3+2*b)*(5+2*b)*t^8+(3+2*b)*(845+48*a^2+440*b+56*b^2+16*a*(27+8*b))*t^4"
     "*u-2*(48*a^3+16*a^2*(33+13*b)+a*(1719+1224*b+208*b^2)+3*(560+573*b+176*b^2+16*b^3))*u^2)+188743680"
     "*w^2*t^4*u*(-(3+2*b)*(17+4*a+4*b)*t^4+(69+8*a^2+52*b+8*b^2+4*a*(13+5*b))*u)+41943040*w^3*t^5*u*((3"
     "+2*b)*t^4-2*(2+a+b)*u)"},
    {2, 4,
     "29360128*t^2*u*(4*(221+36*a+40*b)*(15+16*b+4*b^2)*t^8-(112305+256*a^3+96292*b+26208*b^2+2240*b^3"
     "+48*a^2*(163+60*b)+8*a*(7105+4488*b+672*b^2))*t^4*u+(111195+1600*a^3+85108*b+20752*b^2+1600*b^3+16"
     "*a^2*(1297+380*b)+a*(85108+45920*b+6080*b^2))*u^2)+88080384*w*t^3*u*(-12*(3+2*b)*(5+2*b)*t^8+(2955"
     "+48*a^2+1784*b+256*b^2+16*a*(57+20*b))*t^4*u-(3115+208*a^2+1672*b+208*b^2+8*a*(209+60*b))*u^2)+188743680"
     "*w^2*t^4*u^2*(-2*(16+2*a+5*b)*t^4+5*(7+2*a+2*b)*u)+41943040*w^3*t^5*(t^4-u)*u^2"},
    {2, 5,
     "234881024*t^2*u^2*(9*(5+2*b)*(37+4*a+8*b)*t^8-2*(4080+72*a^2+1951*b+224*b^2+12*a*(99+26*b))*t^4*u"
     "+(6825+304*a^2+2936*b+304*b^2+8*a*(367+84*b))*u^2)+704643072*w*t^3*u^2*(-3*(5+2*b)*t^8+(117+16*a"
     "+30*b)*t^4*u-2*(53+12*a+12*b)*u^2)-754974720*w^2*t^4*(t^4-u)*u^3"},
    {2, 6,
     "469762048*t^2*u^3*((223+12*a+56*b)*t^8-(809+104*a+168*b)*t^4*u+4*(149+28*a+28*b)*u^2)-1409286144"
     "*w*t^3*u^3*(t^8-5*t^4*u+4*u^2)"},
    {2, 7,
     "7516192768*t^2*(t^4-2*u)*(t^4-u)*u^4"},
    {3, 1,
     "7340032*(1+2*a)*(1+2*b)*(3+2*a+2*b)*(5+4*a+4*b)*(7+4*a+4*b)*t^3+9175040*w*(1+2*b)*(-2*(27+16*a^3"
     "+28*b+8*b^2+32*a^2*(2+b)+a*(79+72*b+16*b^2))*t^4+3*u)+7864320*w^2*t*(1+2*b)*(2*(6+11*a+4*a^2+2*b"
     "+4*a*b)*t^4-3*u)+1310720*w^3*t^2*(1+2*b)*(-((5+4*a)*t^4)+3*u)+131072*w^4*t^3*(1+2*b)*(t^4-u)"},
    {3, 2,
     "-14680064*t^3*((3+8*b+4*b^2)*(375+48*a^2+152*b+16*b^2+16*a*(17+4*b))*t^4-2*(1470+32*a^4+2921*b+1894"
     "*b^2+448*b^3+32*b^4+32*a^3*(14+9*b)+2*a^2*(947+1016*b+256*b^2)+a*(3026+4418*b+2032*b^2+288*b^3))"
     "*u)+18350080*w*(8*(6+2*a+b)*(3+8*b+4*b^2)*t^8-2*(225+16*a^3+352*b+160*b^2+16*b^3+32*a^2*(5+3*b)+a"
     "*(403+408*b+96*b^2))*t^4*u+3*u^2)+15728640*w^2*t*(-2*(3+8*b+4*b^2)*t^8+2*(15+4*a^2+14*b+4*b^2+a*(23"
     "+12*b))*t^4*u-3*u^2)-2621440*w^3*t^2*((5+4*a)*t^4-3*u)*u+262144*w^4*t^3*(t^4-u)*u"},
    {3, 3,
     "58720256*t^3*(2*(1+2*b)*(3+2*b)*(5+2*b)*t^8-(3+2*b)*(845+48*a^2+440*b+56*b^2+16*a*(27+8*b))*t^4*u"
     "+2*(48*a^3+16*a^2*(33+13*b)+a*(1719+1224*b+208*b^2)+3*(560+573*b+176*b^2+16*b^3))*u^2)+293601280"
     "*w*t^4*u*((3+2*b)*(17+4*a+4*b)*t^4-(69+8*a^2+52*b+8*b^2+4*a*(13+5*b))*u)+125829120*w^2*t^5*u*(-(3"
     "+2*b)*t^4+2*(2+a+b)*u)"},
    {3, 4,
     "58720256*t^3*u*(12*(15+16*b+4*b^2)*t^8-(2955+48*a^2+1784*b+256*b^2+16*a*(57+20*b))*t^4*u+(3115+208"
     "*a^2+1672*b+208*b^2+8*a*(209+60*b))*u^2)+293601280*w*t^4*u^2*(2*(16+2*a+5*b)*t^4-5*(7+2*a+2*b)*u)"
     "-125829120*w^2*t^5*(t^4-u)*u^2"},
    {3, 5,
     "469762048*t^3*u^2*(3*(5+2*b)*t^8-(117+16*a+30*b)*t^4*u+2*(53+12*a+12*b)*u^2)+1174405120*w*t^4*(t^4"
     "-u)*u^3"},
    {3, 6,
     "939524096*t^3*(t^4-4*u)*(t^4-u)*u^3"},
    {4, 0,
     "8192*w^4*((1+2*b)*t^4-2*(1+a+b)*u)"},
    {4, 1,
     "4587520*(1+2*b)*(2*(27+16*a^3+28*b+8*b^2+32*a^2*(2+b)+a*(79+72*b+16*b^2))*t^4-3*u)+9175040*(1+2*b)"
     "*w*t*(-2*(6+11*a+4*a^2+2*b+4*a*b)*t^4+3*u)+2949120*(1+2*b)*w^2*t^2*((5+4*a)*t^4-3*u)+655360*(1+2"
     "*b)*w^3*t^3*(-t^4+u)+32768*w^4*(t^4-u)*u"},
    {4, 2,
     "9175040*(-8*(6+2*a+b)*(3+8*b+4*b^2)*t^8+2*(225+16*a^3+352*b+160*b^2+16*b^3+32*a^2*(5+3*b)+a*(403"
     "+408*b+96*b^2))*t^4*u-3*u^2)+18350080*w*t*(2*(3+8*b+4*b^2)*t^8-2*(15+4*a^2+14*b+4*b^2+a*(23+12*b))"
     "*t^4*u+3*u^2)+5898240*w^2*t^2*((5+4*a)*t^4-3*u)*u-1310720*w^3*t^3*(t^4-u)*u"},
    {4, 3,
     "-146800640*t^4*u*((3+2*b)*(17+4*a+4*b)*t^4-(69+8*a^2+52*b+8*b^2+4*a*(13+5*b))*u)+146800640*w*t^5"
     "*u*((3+2*b)*t^4-2*(2+a+b)*u)"},
    {4, 4,
     "-146800640*t^4*u^2*(2*(16+2*a+5*b)*t^4-5*(7+2*a+2*b)*u)+146800640*w*t^5*(t^4-u)*u^2"},
    {4, 5,
     "-587202560*t^4*(t^4-u)*u^3"},
    {5, 0,
     "32768*w^3*(-(1+2*b)*t^4+2*(1+a+b)*u)"},
    {5, 1,
     "3670016*(1+2*b)*t*(2*(6+11*a+4*a^2+2*b+4*a*b)*t^4-3*u)+2752512*(1+2*b)*w*t^2*(-((5+4*a)*t^4)+3*u)"
     "+1179648*(1+2*b)*w^2*t^3*(t^4-u)-131072*w^3*(t^4-u)*u"},
    {5, 2,
     "7340032*(-2*(3+8*b+4*b^2)*t^9+2*(15+4*a^2+14*b+4*b^2+a*(23+12*b))*t^5*u-3*t*u^2)-5505024*w*t^2*((5"
     "+4*a)*t^4-3*u)*u+2359296*w^2*t^3*(t^4-u)*u"},
    {5, 3,
     "58720256*t^5*u*(-(3+2*b)*t^4+2*(2+a+b)*u)"},
    {5, 4,
     "-58720256*t^5*(t^4-u)*u^2"},
    {6, 0,
     "49152*w^2*((1+2*b)*t^4-2*(1+a+b)*u)"},
    {6, 1,
     "917504*(1+2*b)*t^2*((5+4*a)*t^4-3*u)-917504*w*(1+2*b)*t^3*(t^4-u)+196608*w^2*(t^4-u)*u"},
    {6, 2,
     "1835008*t^2*((5+4*a)*t^4-3*u)*u-1835008*w*t^3*(t^4-u)*u"},
    {7, 0,
     "32768*w*(-(1+2*b)*t^4+2*(1+a+b)*u)"},
    {7, 1,
     "262144*(1+2*b)*t^3*(t^4-u)-131072*w*(t^4-u)*u"},
    {7, 2,
     "524288*t^3*(t^4-u)*u"},
    {8, 0,
     "8192*((1+2*b)*t^4-2*(1+a+b)*u)"},
    {8, 1,
     "32768*(t^4-u)*u"},
};
const std::size_t kI12TableK4Size = sizeof(kI12TableK4) / sizeof(kI12TableK4[0]);
}  // namespace ttw::detail
